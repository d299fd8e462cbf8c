#include "ecm/graph.hpp"

#include <algorithm>
#include <numeric>

#include "ecm/error.hpp"

namespace ecm {

namespace {

std::vector<std::vector<HalfEdge>> lexicographic_incidence(std::size_t n, std::span<const Edge> edges) {
  std::vector<std::vector<HalfEdge>> at(n);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    at[edges[e].u].push_back({e, 0});
    at[edges[e].v].push_back({e, 1});
  }
  return at;
}

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
  std::vector<std::size_t> parent;
};

void require_group_vector(std::span<const int> v, std::size_t n, const Group& q, const char* what) {
  if (v.size() != n) throw InvalidArgument(std::string(what) + ": wrong length");
  for (int a : v)
    if (a < 0 || a >= q.order()) throw InvalidArgument(std::string(what) + ": element outside group");
}

}  // namespace

Multigraph::Multigraph(std::size_t vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)), head_end_(edges_.size(), 1) {
  for (const auto& e : edges_)
    if (e.u >= vertex_count_ || e.v >= vertex_count_) throw InvalidArgument("edge endpoint out of range");
  at_vertex_ = lexicographic_incidence(vertex_count_, edges_);
}

bool Multigraph::is_regular(std::size_t k) const {
  for (std::size_t v = 0; v < vertex_count_; ++v)
    if (degree(v) != k) return false;
  return true;
}

long Multigraph::regular_degree() const {
  if (vertex_count_ == 0) return -1;
  const auto k = degree(0);
  return is_regular(k) ? static_cast<long>(k) : -1;
}

bool Multigraph::has_default_orientation() const {
  return std::all_of(head_end_.begin(), head_end_.end(), [](int h) { return h == 1; });
}

Multigraph Multigraph::with_orientation(std::vector<int> head_ends) const {
  if (head_ends.size() != edges_.size()) throw InvalidArgument("orientation needs one head end per edge");
  for (int h : head_ends)
    if (h != 0 && h != 1) throw InvalidArgument("head end must be 0 or 1");
  Multigraph g = *this;
  g.head_end_ = std::move(head_ends);
  return g;
}

Multigraph Multigraph::with_rotation(std::vector<std::vector<HalfEdge>> order) const {
  if (order.size() != vertex_count_) throw InvalidArgument("rotation needs one order per vertex");
  const auto canonical = lexicographic_incidence(vertex_count_, edges_);
  for (std::size_t v = 0; v < vertex_count_; ++v) {
    auto sorted = order[v];
    std::sort(sorted.begin(), sorted.end());
    if (sorted != canonical[v])
      throw InvalidArgument("rotation at vertex " + std::to_string(v) + " must list each half-edge of H(v) once");
  }
  Multigraph g = *this;
  g.at_vertex_ = std::move(order);
  g.has_rotation_ = true;
  return g;
}

Multigraph Multigraph::without_rotation() const {
  Multigraph g = *this;
  g.at_vertex_ = lexicographic_incidence(vertex_count_, edges_);
  g.has_rotation_ = false;
  return g;
}

Multigraph Multigraph::with_pfaffian_assertion(bool asserted) const {
  Multigraph g = *this;
  g.pfaffian_asserted_ = asserted;
  return g;
}

bool Multigraph::operator==(const Multigraph& o) const {
  if (vertex_count_ != o.vertex_count_ || edges_.size() != o.edges_.size()) return false;
  for (std::size_t e = 0; e < edges_.size(); ++e)
    if (edges_[e].u != o.edges_[e].u || edges_[e].v != o.edges_[e].v) return false;
  return head_end_ == o.head_end_ && has_rotation_ == o.has_rotation_ && at_vertex_ == o.at_vertex_ &&
         pfaffian_asserted_ == o.pfaffian_asserted_;
}

EdgeSubset EdgeSubset::all(const Multigraph& g) {
  if (g.edge_count() > 64) throw InvalidArgument("edge subsets are limited to 64 edges");
  return {g.edge_count() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.edge_count()) - 1};
}

std::size_t components(const Multigraph& g, EdgeSubset a) {
  if (g.edge_count() > 64) throw InvalidArgument("edge subsets are limited to 64 edges");
  UnionFind uf(g.vertex_count());
  std::size_t k = g.vertex_count();
  for (std::size_t e = 0; e < g.edge_count(); ++e)
    if (a.contains(e) && uf.unite(g.edge(e).u, g.edge(e).v)) --k;
  return k;
}

std::size_t components(const Multigraph& g) {
  UnionFind uf(g.vertex_count());
  std::size_t k = g.vertex_count();
  for (const auto& e : g.edges())
    if (uf.unite(e.u, e.v)) --k;
  return k;
}

std::size_t rank(const Multigraph& g, EdgeSubset a) { return g.vertex_count() - components(g, a); }

std::size_t rank(const Multigraph& g) { return g.vertex_count() - components(g); }

std::vector<int> boundary(const Multigraph& g, const Group& q, std::span<const int> y) {
  require_group_vector(y, g.edge_count(), q, "boundary");
  std::vector<int> out(g.vertex_count(), 0);
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    out[g.head(e)] = q.add(out[g.head(e)], y[e]);
    out[g.tail(e)] = q.sub(out[g.tail(e)], y[e]);
  }
  return out;
}

std::vector<int> coboundary(const Multigraph& g, const Group& q, std::span<const int> x) {
  require_group_vector(x, g.vertex_count(), q, "coboundary");
  std::vector<int> out(g.edge_count());
  for (std::size_t e = 0; e < g.edge_count(); ++e) out[e] = q.sub(x[g.head(e)], x[g.tail(e)]);
  return out;
}

TwoStretch two_stretch(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<Edge> edges;
  std::vector<HalfEdge> map;
  edges.reserve(2 * g.edge_count());
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    for (int end = 0; end < 2; ++end) {
      edges.push_back({g.endpoint({e, end}), n + e});
      map.push_back({e, end});
    }
  }
  return {Multigraph(n + g.edge_count(), std::move(edges)), std::move(map)};
}

Multigraph line_graph(const Multigraph& g) {
  std::vector<Edge> edges;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const auto hs = g.half_edges_at(v);
    for (std::size_t i = 0; i < hs.size(); ++i)
      for (std::size_t j = i + 1; j < hs.size(); ++j) edges.push_back({hs[i].edge, hs[j].edge});
  }
  return Multigraph(g.edge_count(), std::move(edges));
}

Multigraph disjoint_union(const Multigraph& a, const Multigraph& b) {
  const std::size_t shift_v = a.vertex_count();
  const std::size_t shift_e = a.edge_count();
  std::vector<Edge> edges(a.edges().begin(), a.edges().end());
  for (const auto& e : b.edges()) edges.push_back({e.u + shift_v, e.v + shift_v});
  std::vector<int> heads;
  for (std::size_t e = 0; e < a.edge_count(); ++e) heads.push_back(a.head_end(e));
  for (std::size_t e = 0; e < b.edge_count(); ++e) heads.push_back(b.head_end(e));
  Multigraph u = Multigraph(a.vertex_count() + b.vertex_count(), std::move(edges)).with_orientation(heads);
  if (a.has_rotation() && b.has_rotation()) {
    std::vector<std::vector<HalfEdge>> rot;
    for (std::size_t v = 0; v < a.vertex_count(); ++v) {
      const auto hs = a.half_edges_at(v);
      rot.emplace_back(hs.begin(), hs.end());
    }
    for (std::size_t v = 0; v < b.vertex_count(); ++v) {
      std::vector<HalfEdge> hs;
      for (auto h : b.half_edges_at(v)) hs.push_back({h.edge + shift_e, h.end});
      rot.push_back(std::move(hs));
    }
    u = u.with_rotation(std::move(rot));
  }
  return u;
}

}  // namespace ecm
