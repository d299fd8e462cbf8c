#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ecm/abelian.hpp"

namespace ecm {

/// Half-edge (edge_index, end). A loop has two distinct half-edges at the
/// same vertex.
struct HalfEdge {
  std::size_t edge = 0;
  int end = 0;

  auto operator<=>(const HalfEdge&) const = default;
};

struct Edge {
  std::size_t u = 0;  // end 0
  std::size_t v = 0;  // end 1
};

/// Undirected multigraph with loops and parallel edges, an orientation and an
/// optional rotation system. Values are immutable; with_*() return modified
/// copies.
///
/// The orientation picks a head end per edge (end 1 by default). Under it
/// sigma_{v,e} = +1 at the head half-edge and -1 at the tail half-edge, so a
/// loop contributes +1 and -1 at its vertex.
///
/// half_edges_at(v) is the rotation order when a rotation system is present
/// and (edge, end) lexicographic otherwise. Every vertex-indexed product over
/// "e incident to v" in this library runs over that list, so a loop appears
/// twice.
class Multigraph {
 public:
  Multigraph() = default;
  Multigraph(std::size_t vertex_count, std::vector<Edge> edges);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::size_t half_edge_count() const noexcept { return 2 * edges_.size(); }
  const Edge& edge(std::size_t e) const { return edges_.at(e); }
  std::span<const Edge> edges() const noexcept { return edges_; }

  std::size_t endpoint(HalfEdge h) const { return h.end == 0 ? edges_.at(h.edge).u : edges_.at(h.edge).v; }
  bool is_loop(std::size_t e) const { return edges_.at(e).u == edges_.at(e).v; }
  std::size_t degree(std::size_t v) const { return half_edges_at(v).size(); }
  bool is_regular(std::size_t k) const;
  /// Common degree, or -1 when the graph is not regular (or empty).
  long regular_degree() const;

  int head_end(std::size_t e) const { return head_end_.at(e); }
  std::size_t head(std::size_t e) const { return endpoint({e, head_end(e)}); }
  std::size_t tail(std::size_t e) const { return endpoint({e, 1 - head_end(e)}); }
  /// sigma at a half-edge: +1 at the head end, -1 at the tail end.
  int sign(HalfEdge h) const { return h.end == head_end(h.edge) ? 1 : -1; }
  bool has_default_orientation() const;

  bool has_rotation() const noexcept { return has_rotation_; }
  std::span<const HalfEdge> half_edges_at(std::size_t v) const { return at_vertex_.at(v); }

  bool pfaffian_asserted() const noexcept { return pfaffian_asserted_; }

  Multigraph with_orientation(std::vector<int> head_ends) const;
  /// Validates that every vertex lists exactly the half-edges of H(v).
  Multigraph with_rotation(std::vector<std::vector<HalfEdge>> order) const;
  Multigraph without_rotation() const;
  Multigraph with_pfaffian_assertion(bool asserted) const;

  bool operator==(const Multigraph& other) const;

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> head_end_;
  std::vector<std::vector<HalfEdge>> at_vertex_;
  bool has_rotation_ = false;
  bool pfaffian_asserted_ = false;
};

/// Bitmask over edge indices; graphs with more than 64 edges cannot form one.
struct EdgeSubset {
  std::uint64_t bits = 0;

  static EdgeSubset none() { return {}; }
  static EdgeSubset all(const Multigraph& g);
  bool contains(std::size_t e) const { return (bits >> e) & 1U; }
  EdgeSubset with(std::size_t e) const { return {bits | (std::uint64_t{1} << e)}; }
  int size() const { return __builtin_popcountll(bits); }
};

/// Connected components of (V, A), isolated vertices included.
std::size_t components(const Multigraph& g, EdgeSubset a);
std::size_t components(const Multigraph& g);
/// r(A) = |V| - k(V, A).
std::size_t rank(const Multigraph& g, EdgeSubset a);
std::size_t rank(const Multigraph& g);

/// (dy)_v = sum_e sigma_{v,e} y_e. Colourings are vectors of group elements.
std::vector<int> boundary(const Multigraph& g, const Group& q, std::span<const int> y);
/// (delta x)_e = x_head - x_tail; zero on loops.
std::vector<int> coboundary(const Multigraph& g, const Group& q, std::span<const int> x);

struct TwoStretch {
  Multigraph graph;
  /// Edge 2e + end of the stretch corresponds to half-edge (e, end).
  std::vector<HalfEdge> half_edge_of_edge;
};

/// Subdivides every edge once. Vertex |V| + e is the subdivision vertex of e,
/// and every new edge runs from the original vertex (end 0) toward the
/// subdivision vertex (end 1, the head).
TwoStretch two_stretch(const Multigraph& g);

/// One edge per unordered pair of distinct half-edges sharing a vertex,
/// directed from the earlier half-edge to the later one in half_edges_at().
Multigraph line_graph(const Multigraph& g);

/// Disjoint union; rotations are kept only when both operands carry one.
Multigraph disjoint_union(const Multigraph& a, const Multigraph& b);

}  // namespace ecm
