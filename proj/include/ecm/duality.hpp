#pragma once

#include <vector>

#include "ecm/abelian.hpp"
#include "ecm/graph.hpp"
#include "ecm/models.hpp"
#include "ecm/oracles.hpp"

namespace ecm {

/// Two independently computed sides of an identity.
struct SidePair {
  Complex lhs;
  Complex rhs;

  double residual() const { return std::abs(lhs - rhs); }
  /// |lhs - rhs| / max(1, |lhs|, |rhs|).
  double relative_residual() const;
};

/// q^{-|V|/2} sum_x prod f_v(x_v) prod conj(g_e((dx)_e)) against
/// q^{-|E|/2} sum_y prod f_v^F((dy)_v) prod conj(g_e^F(y_e)).
/// f holds one arity-1 function per vertex and h one per edge.
SidePair general_duality(const Multigraph& g, std::span<const QFunction> f, std::span<const QFunction> h,
                         EvalLimits limits = {});
inline bool general_duality_check(const Multigraph& g, std::span<const QFunction> f, std::span<const QFunction> h,
                                  double tol, EvalLimits limits = {}) {
  return general_duality(g, f, h, limits).relative_residual() <= tol;
}

/// cwe(ker d; h) against q^{-|E|/2} |ker d| cwe(im delta; h^F).
SidePair macwilliams(const Multigraph& g, const QFunction& h, EvalLimits limits = {});

/// q^{-|V|} sum_x prod_e sum_b prod_{v in e} g^F(x_v - b), a loop counting
/// its vertex twice.
ModelValue cwe_flow_vertex_model(const Multigraph& g, const QFunction& weight, EvalLimits limits = {});
/// q^{-|V|} sum_y prod_v sum_a prod_{e at v} g^F(a - y_e) over half-edges.
ModelValue cwe_flow_edge_model(const Multigraph& g, const QFunction& weight, EvalLimits limits = {});
/// The weight g * g^N whose flow enumerator both models compute.
QFunction flow_model_target_weight(const QFunction& weight);

/// q^{|E|+r(E)} E[prod_{(v,e) in H} f(X_v - Y_e)], summed over Y edge by edge.
ModelValue cwe_tension_expectation(const Multigraph& g, const QFunction& weight, EvalLimits limits = {});
/// The weight f * f^N whose tension enumerator the expectation computes.
QFunction tension_target_weight(const QFunction& weight);

/// q^{-|E|-|V|} (s-1)^{2|E|} sum_y prod_v sum_a w^{#half-edges at v coloured a},
/// w = (s-1+q)/(s-1). Equals (s^2-1)^{|E|-r(E)} T(G; s^2, (s^2-1+q)/(s^2-1)).
ModelValue tutte_edge_model(const Multigraph& g, int q, Complex s, EvalLimits limits = {});

/// q^{-|E|} 2^{|V|} sum_y (1-q)^{#monochrome} (1-q/2)^{|V|-#rainbow} on a
/// 3-regular graph.
ModelValue flow_cubic_edge_value(const Multigraph& g, int q, EvalLimits limits = {});
/// The same value rounded; throws Mismatch when the rounding residual exceeds tol.
long long flow_cubic_edge_model(const Multigraph& g, int q, double tol = 1e-6, EvalLimits limits = {});

struct SpectralFactor {
  ComplexMatrix h;           // g(a, b) = sum_c h(a, c) h(b, c)
  Eigen::VectorXd eigenvalues;  // descending, matching the columns of h
  int rank = 0;              // number of nonzero columns
  double reconstruction_residual = 0.0;
};

/// Eigendecomposition g = V diag(lambda) V^T with h = V sqrt(lambda). Columns
/// follow descending eigenvalues, each eigenvector's largest-magnitude entry
/// is made positive, and columns with |lambda| < threshold * ||g|| are zeroed.
SpectralFactor szegedy_decompose(const RealMatrix& g, double threshold = 1e-9);

/// sum_y prod_v sum_a f(a) prod_{e at v} h(a, y_e), y ranging over the nonzero
/// columns of the spectral factor of g.
ModelValue szegedy_edge_model(const Multigraph& g, const QFunction& vertex_weight, const RealMatrix& edge_weight,
                              EvalLimits limits = {});
/// The matching vertex model sum_x prod f(x_v) prod g(x_tail, x_head).
ModelValue szegedy_vertex_model(const Multigraph& g, const QFunction& vertex_weight, const RealMatrix& edge_weight,
                                EvalLimits limits = {});

/// Vertex weights s_a and edge weights t_b on a group.
struct XQParams {
  Group group;
  std::vector<Complex> s;
  std::vector<Complex> t;

  void validate() const;
  bool t_symmetric(double tol = 1e-12) const;
};

/// sum_x prod_v s_{x_v} prod_e t_{(delta x)_e}.
ModelValue xq_evaluate(const Multigraph& g, const XQParams& p, EvalLimits limits = {});
/// q^{-|E|} sum_y prod_v s^_{(dy)_v} prod_e t^_{y_e} with
/// s^_a = sum_c conj(chi(ca)) s_c and t^_b = sum_c chi(cb) t_c.
ModelValue xq_dual(const Multigraph& g, const XQParams& p, EvalLimits limits = {});
/// s_a = s^a on Z_q, t_0 = t, t_b = 1 otherwise.
XQParams principal_params(int q, Complex s, Complex t);

struct PrincipalValue {
  Complex value;
  int branch = 1;  // 1 when s^q != 1, else 2
  int root = 0;    // c with s = exp(-2 pi i c / q) on branch 2
};

/// q^{-|E|} sum_y (t-1+q)^{#zero} (t-1)^{#nonzero} prod_v (s^q-1)/(s e^{2 pi i (dy)_v/q} - 1).
Complex principal_root_free(const Multigraph& g, int q, Complex s, Complex t, EvalLimits limits = {});
/// q^{|V|-|E|} sum_{y : (dy)_v = c for all v} (t-1+q)^{#zero} (t-1)^{#nonzero}.
Complex principal_root(const Multigraph& g, int q, int c, Complex t, EvalLimits limits = {});
/// Dispatches on |s^q - 1| < 1e-9.
PrincipalValue principal_specialization(const Multigraph& g, int q, Complex s, Complex t, EvalLimits limits = {});

struct ConvolutionRoot {
  std::vector<Complex> u;
  double residual = 0.0;  // max_b |sum_a u_a u_{a-b} - t_b|
};

/// u with t_b = sum_a u_a u_{a-b}: u^F = q^{-1/4} sqrt(t^F) (principal root),
/// then the inverse transform. Requires t_b = t_{-b}.
ConvolutionRoot convolution_root(const Group& group, std::span<const Complex> t);

/// sum_y prod_v sum_a s_a prod_{e at v} u_{y_e - a}. Throws InvalidArgument if
/// t is not symmetric and Mismatch if the square root does not reconstruct t.
ModelValue xq_edge_model(const Multigraph& g, const XQParams& p, EvalLimits limits = {});

/// Both sides of (st)^{|E|/3} F(G;4) = 4^{-|V|} sum over vertex F4-colourings
/// of prod_e w(x_u + x_v), w = (1+s+t, 1-s-t, -1-s+t, -1+s-t) on (0, 1, w, w^2).
SidePair fg4_identity(const Multigraph& g, Complex s, Complex t, EvalLimits limits = {});
bool fg4_identity_check(const Multigraph& g, Complex s, Complex t, double tol, EvalLimits limits = {});

}  // namespace ecm
