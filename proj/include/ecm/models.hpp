#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <span>

#include "ecm/abelian.hpp"
#include "ecm/graph.hpp"

namespace ecm {

struct EvalLimits {
  std::uint64_t max_terms = 100'000'000;
};

/// Result of an exhaustive partition-function evaluation.
struct ModelValue {
  Complex value;
  std::uint64_t terms = 0;

  double magnitude() const { return std::abs(value); }
  double imag_residual() const { return std::abs(value.imag()); }
  long long nearest_integer() const { return std::llround(value.real()); }
  /// max(|Re - round(Re)|, |Im|).
  double integer_residual() const {
    return std::max(std::abs(value.real() - std::round(value.real())), imag_residual());
  }
};

/// Vertex weights f in C^{Q*}: one table per arity.
class ArityFamily {
 public:
  explicit ArityFamily(Group group) : group_(std::move(group)) {}

  /// Tabulates fn on Q^d for every d in arities.
  template <class Fn>
  static ArityFamily tabulate(const Group& group, std::span<const int> arities, Fn&& fn) {
    ArityFamily fam(group);
    for (int d : arities) fam.set(QFunction::tabulate(group, d, fn));
    return fam;
  }
  /// Arities needed by g: every vertex degree.
  static std::vector<int> degrees_of(const Multigraph& g);

  const Group& group() const noexcept { return group_; }
  void set(QFunction f);
  bool has(int arity) const { return tables_.count(arity) != 0; }
  const QFunction& at(int arity) const;
  std::vector<int> arities() const;

  /// f^U applied to every member.
  ArityFamily transformed(const ComplexMatrix& u) const;

 private:
  Group group_;
  std::map<int, QFunction> tables_;
};

/// sum_x prod_v f(x_v) prod_e g(x_tail, x_head); a loop contributes g(x_v, x_v).
struct VertexModel {
  QFunction vertex_weight;  // arity 1
  QFunction edge_weight;    // arity 2
};

/// sum_y prod_v f(y at H(v)) prod_e g(y_e), vertex arguments in half_edges_at order.
struct EdgeModel {
  ArityFamily vertex_weight;
  QFunction edge_weight;  // arity 1
};

ModelValue vertex_partition(const Multigraph& g, const VertexModel& m, EvalLimits limits = {});
ModelValue edge_partition(const Multigraph& g, const EdgeModel& m, EvalLimits limits = {});

/// Real-bilinear pairing (f^{(x)V}, g^{(x)E}) over Q^H. The pair of an edge is
/// (z at end 0, z at end 1). Only the support of g is enumerated per edge.
ModelValue halfedge_inner(const Multigraph& g, const ArityFamily& f, const QFunction& pair_weight,
                          EvalLimits limits = {});

struct InvarianceCheck {
  Complex lhs;
  Complex rhs;
  /// max |(U (x) U) 1_Mono - 1_Mono| on Q^2.
  double monochrome_fixed_residual = 0.0;
  bool passed = false;
};

/// Compares (f^{(x)V}, 1_Mono^{(x)E}) with ((f^U)^{(x)V}, 1_Mono^{(x)E}).
InvarianceCheck orthogonal_invariance_check(const Multigraph& g, const ArityFamily& f, const RealMatrix& u,
                                            double tol, EvalLimits limits = {});

}  // namespace ecm
