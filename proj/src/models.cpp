#include "ecm/models.hpp"

#include <algorithm>
#include <set>

#include "ecm/error.hpp"
#include "enumerate.hpp"

namespace ecm {

namespace {

struct VertexArgs {
  const QFunction* table;
  std::vector<std::size_t> edges;  // edge of each half-edge, in argument order
};

std::vector<VertexArgs> vertex_arguments(const Multigraph& g, const ArityFamily& f) {
  std::vector<VertexArgs> out;
  out.reserve(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    VertexArgs args{&f.at(static_cast<int>(g.degree(v))), {}};
    for (auto h : g.half_edges_at(v)) args.edges.push_back(h.edge);
    out.push_back(std::move(args));
  }
  return out;
}

}  // namespace

std::vector<int> ArityFamily::degrees_of(const Multigraph& g) {
  std::set<int> ds;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) ds.insert(static_cast<int>(g.degree(v)));
  return {ds.begin(), ds.end()};
}

void ArityFamily::set(QFunction f) {
  if (!(f.group() == group_)) throw InvalidArgument("vertex weight belongs to a different group");
  const int d = f.arity();
  tables_.insert_or_assign(d, std::move(f));
}

const QFunction& ArityFamily::at(int arity) const {
  auto it = tables_.find(arity);
  if (it == tables_.end()) throw InvalidArgument("vertex weight missing for arity " + std::to_string(arity));
  return it->second;
}

std::vector<int> ArityFamily::arities() const {
  std::vector<int> out;
  for (const auto& [d, _] : tables_) out.push_back(d);
  return out;
}

ArityFamily ArityFamily::transformed(const ComplexMatrix& u) const {
  ArityFamily out(group_);
  for (const auto& [d, f] : tables_) out.set(transform_by(f, u));
  return out;
}

ModelValue vertex_partition(const Multigraph& g, const VertexModel& m, EvalLimits limits) {
  const Group& grp = m.vertex_weight.group();
  if (m.vertex_weight.arity() != 1 || m.edge_weight.arity() != 2)
    throw InvalidArgument("vertex model needs arity-1 vertex and arity-2 edge weights");
  if (!(m.edge_weight.group() == grp)) throw InvalidArgument("vertex model weights use different groups");
  const int q = grp.order();
  const double terms = detail::power_estimate(q, g.vertex_count());
  detail::require_terms("vertex model q^|V|", terms, limits.max_terms);

  std::vector<std::pair<std::size_t, std::size_t>> ends;
  for (std::size_t e = 0; e < g.edge_count(); ++e) ends.emplace_back(g.tail(e), g.head(e));
  const auto& f = m.vertex_weight.values();
  const auto& w = m.edge_weight.values();
  const auto uq = static_cast<std::size_t>(q);

  const Complex sum = detail::sum_configurations<Complex>(q, g.vertex_count(), [&](std::span<const int> x) {
    Complex p = 1.0;
    for (int a : x) p *= f[static_cast<std::size_t>(a)];
    for (const auto& [t, h] : ends) p *= w[static_cast<std::size_t>(x[t]) * uq + static_cast<std::size_t>(x[h])];
    return p;
  });
  return {sum, static_cast<std::uint64_t>(terms)};
}

ModelValue edge_partition(const Multigraph& g, const EdgeModel& m, EvalLimits limits) {
  const Group& grp = m.vertex_weight.group();
  if (m.edge_weight.arity() != 1) throw InvalidArgument("edge model needs an arity-1 edge weight");
  if (!(m.edge_weight.group() == grp)) throw InvalidArgument("edge model weights use different groups");
  const int q = grp.order();
  const double terms = detail::power_estimate(q, g.edge_count());
  detail::require_terms("edge model q^|E|", terms, limits.max_terms);

  const auto args = vertex_arguments(g, m.vertex_weight);
  const auto& w = m.edge_weight.values();
  const auto uq = static_cast<std::size_t>(q);

  const Complex sum = detail::sum_configurations<Complex>(q, g.edge_count(), [&](std::span<const int> y) {
    Complex p = 1.0;
    for (int b : y) p *= w[static_cast<std::size_t>(b)];
    for (const auto& va : args) {
      std::size_t idx = 0;
      for (std::size_t e : va.edges) idx = idx * uq + static_cast<std::size_t>(y[e]);
      p *= (*va.table)[idx];
    }
    return p;
  });
  return {sum, static_cast<std::uint64_t>(terms)};
}

ModelValue halfedge_inner(const Multigraph& g, const ArityFamily& f, const QFunction& pair_weight,
                          EvalLimits limits) {
  if (pair_weight.arity() != 2) throw InvalidArgument("half-edge pairing needs an arity-2 edge weight");
  if (!(pair_weight.group() == f.group())) throw InvalidArgument("half-edge pairing weights use different groups");
  const auto uq = static_cast<std::size_t>(f.group().order());

  struct Pair {
    int first, second;
    Complex weight;
  };
  std::vector<Pair> support;
  for (std::size_t i = 0; i < pair_weight.size(); ++i)
    if (pair_weight[i] != Complex(0.0))
      support.push_back({static_cast<int>(i / uq), static_cast<int>(i % uq), pair_weight[i]});

  const double terms = detail::power_estimate(static_cast<double>(support.size()), g.edge_count());
  detail::require_terms("half-edge pairing |supp g|^|E|", terms, limits.max_terms);
  if (support.empty()) return {g.edge_count() == 0 ? Complex(1.0) : Complex(0.0), 0};

  // Argument lists reference half-edges as 2e + end.
  struct Args {
    const QFunction* table;
    std::vector<std::size_t> halves;
  };
  std::vector<Args> args;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    Args a{&f.at(static_cast<int>(g.degree(v))), {}};
    for (auto h : g.half_edges_at(v)) a.halves.push_back(2 * h.edge + static_cast<std::size_t>(h.end));
    args.push_back(std::move(a));
  }

  const Complex sum = detail::sum_configurations<Complex>(
      static_cast<int>(support.size()), g.edge_count(), [&](std::span<const int> pick) {
        thread_local std::vector<int> z;
        z.resize(2 * pick.size());
        Complex p = 1.0;
        for (std::size_t e = 0; e < pick.size(); ++e) {
          const Pair& s = support[static_cast<std::size_t>(pick[e])];
          z[2 * e] = s.first;
          z[2 * e + 1] = s.second;
          p *= s.weight;
        }
        for (const auto& a : args) {
          std::size_t idx = 0;
          for (std::size_t h : a.halves) idx = idx * uq + static_cast<std::size_t>(z[h]);
          p *= (*a.table)[idx];
        }
        return p;
      });
  return {sum, static_cast<std::uint64_t>(terms)};
}

InvarianceCheck orthogonal_invariance_check(const Multigraph& g, const ArityFamily& f, const RealMatrix& u,
                                            double tol, EvalLimits limits) {
  const Group& grp = f.group();
  const ComplexMatrix uc = u.cast<Complex>();
  InvarianceCheck out;
  const QFunction mono = monochrome_indicator(grp, 2);
  out.monochrome_fixed_residual = max_abs_diff(transform_by(mono, uc), mono);
  out.lhs = halfedge_inner(g, f, mono, limits).value;
  out.rhs = halfedge_inner(g, f.transformed(uc), mono, limits).value;
  const double scale = std::max(1.0, std::abs(out.lhs));
  out.passed = std::abs(out.lhs - out.rhs) <= tol * scale && out.monochrome_fixed_residual <= tol;
  return out;
}

}  // namespace ecm
