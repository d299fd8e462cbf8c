#include "ecm/duality.hpp"

#include <algorithm>
#include <numbers>

#include "ecm/error.hpp"
#include "enumerate.hpp"

namespace ecm {

namespace {

constexpr double kPi = std::numbers::pi;

Complex qpow(int q, double exponent) { return std::pow(static_cast<double>(q), exponent); }

void require_weight(const QFunction& w, const char* what) {
  if (w.arity() != 1) throw InvalidArgument(std::string(what) + ": weight must be a function on Q");
}

/// Symmetric pair weight W(a, c) = sum_b w(a - b) w(c - b).
QFunction pair_overlap(const QFunction& w) {
  const Group& grp = w.group();
  const int q = grp.order();
  return QFunction::tabulate(grp, 2, [&](std::span<const int> ac) {
    Complex acc = 0.0;
    for (int b = 0; b < q; ++b) acc += w[static_cast<std::size_t>(grp.sub(ac[0], b))] * w[static_cast<std::size_t>(grp.sub(ac[1], b))];
    return acc;
  });
}

ModelValue uniform_edge_model(const Multigraph& g, ArityFamily family, EvalLimits limits) {
  const Group grp = family.group();
  return edge_partition(g, EdgeModel{std::move(family), constant(grp, 1, 1.0)}, limits);
}

ModelValue scaled_value(ModelValue v, Complex factor) {
  v.value *= factor;
  return v;
}

void require_cubic(const Multigraph& g, const char* what) {
  if (!g.is_regular(3)) throw InvalidArgument(std::string(what) + ": graph must be 3-regular");
}

}  // namespace

double SidePair::relative_residual() const {
  return residual() / std::max({1.0, std::abs(lhs), std::abs(rhs)});
}

SidePair general_duality(const Multigraph& g, std::span<const QFunction> f, std::span<const QFunction> h,
                         EvalLimits limits) {
  if (f.size() != g.vertex_count() || h.size() != g.edge_count())
    throw InvalidArgument("duality: need one vertex weight per vertex and one edge weight per edge");
  if (f.empty() && h.empty()) throw InvalidArgument("duality: empty graph carries no group");
  const Group grp = f.empty() ? h[0].group() : f[0].group();
  for (const auto& w : f)
    if (!(w.group() == grp) || w.arity() != 1) throw InvalidArgument("duality: vertex weights must be functions on Q");
  for (const auto& w : h)
    if (!(w.group() == grp) || w.arity() != 1) throw InvalidArgument("duality: edge weights must be functions on Q");
  const int q = grp.order();
  detail::require_terms("duality vertex side q^|V|", detail::power_estimate(q, g.vertex_count()), limits.max_terms);
  detail::require_terms("duality edge side q^|E|", detail::power_estimate(q, g.edge_count()), limits.max_terms);

  std::vector<QFunction> f_hat, h_hat;
  for (const auto& w : f) f_hat.push_back(fourier(w));
  for (const auto& w : h) h_hat.push_back(fourier(w));

  const Complex lhs = detail::sum_configurations<Complex>(q, g.vertex_count(), [&](std::span<const int> x) {
    Complex p = 1.0;
    for (std::size_t v = 0; v < x.size(); ++v) p *= f[v][static_cast<std::size_t>(x[v])];
    for (std::size_t e = 0; e < g.edge_count(); ++e)
      p *= std::conj(h[e][static_cast<std::size_t>(grp.sub(x[g.head(e)], x[g.tail(e)]))]);
    return p;
  });

  const Complex rhs = detail::sum_configurations<Complex>(q, g.edge_count(), [&](std::span<const int> y) {
    thread_local std::vector<int> bd;
    bd.assign(g.vertex_count(), 0);
    Complex p = 1.0;
    for (std::size_t e = 0; e < y.size(); ++e) {
      bd[g.head(e)] = grp.add(bd[g.head(e)], y[e]);
      bd[g.tail(e)] = grp.sub(bd[g.tail(e)], y[e]);
      p *= std::conj(h_hat[e][static_cast<std::size_t>(y[e])]);
    }
    for (std::size_t v = 0; v < bd.size(); ++v) p *= f_hat[v][static_cast<std::size_t>(bd[v])];
    return p;
  });

  return {lhs * qpow(q, -0.5 * static_cast<double>(g.vertex_count())),
          rhs * qpow(q, -0.5 * static_cast<double>(g.edge_count()))};
}

SidePair macwilliams(const Multigraph& g, const QFunction& h, EvalLimits limits) {
  require_weight(h, "MacWilliams");
  const Group& grp = h.group();
  const auto flows = enumerate_flows(g, grp, limits);
  const auto tensions = enumerate_tensions(g, grp, limits);
  const QFunction h_hat = fourier(h);
  const Complex lhs = cwe(flows, h.values());
  const Complex rhs = qpow(grp.order(), -0.5 * static_cast<double>(g.edge_count())) *
                      static_cast<double>(flows.size()) * cwe(tensions, h_hat.values());
  return {lhs, rhs};
}

QFunction flow_model_target_weight(const QFunction& weight) { return pointwise(weight, negate(weight)); }

QFunction tension_target_weight(const QFunction& weight) { return convolve(weight, negate(weight)); }

ModelValue cwe_flow_vertex_model(const Multigraph& g, const QFunction& weight, EvalLimits limits) {
  require_weight(weight, "flow vertex model");
  const Group& grp = weight.group();
  const ModelValue v = vertex_partition(g, VertexModel{constant(grp, 1, 1.0), pair_overlap(fourier(weight))}, limits);
  return scaled_value(v, qpow(grp.order(), -static_cast<double>(g.vertex_count())));
}

ModelValue cwe_flow_edge_model(const Multigraph& g, const QFunction& weight, EvalLimits limits) {
  require_weight(weight, "flow edge model");
  const Group& grp = weight.group();
  const int q = grp.order();
  const QFunction w_hat = fourier(weight);
  const auto arities = ArityFamily::degrees_of(g);
  auto family = ArityFamily::tabulate(grp, arities, [&](std::span<const int> y) {
    Complex acc = 0.0;
    for (int a = 0; a < q; ++a) {
      Complex p = 1.0;
      for (int c : y) p *= w_hat[static_cast<std::size_t>(grp.sub(a, c))];
      acc += p;
    }
    return acc;
  });
  return scaled_value(uniform_edge_model(g, std::move(family), limits), qpow(q, -static_cast<double>(g.vertex_count())));
}

ModelValue cwe_tension_expectation(const Multigraph& g, const QFunction& weight, EvalLimits limits) {
  require_weight(weight, "tension expectation");
  const Group& grp = weight.group();
  const ModelValue v = vertex_partition(g, VertexModel{constant(grp, 1, 1.0), pair_overlap(weight)}, limits);
  const double exponent = static_cast<double>(rank(g)) - static_cast<double>(g.vertex_count());
  return scaled_value(v, qpow(grp.order(), exponent));
}

ModelValue tutte_edge_model(const Multigraph& g, int q, Complex s, EvalLimits limits) {
  if (std::abs(s - 1.0) < 1e-12) throw InvalidArgument("Tutte edge model needs s != 1");
  const Group grp = Group::cyclic(q);
  const Complex w = (s - 1.0 + static_cast<double>(q)) / (s - 1.0);
  auto family = ArityFamily::tabulate(grp, ArityFamily::degrees_of(g), [&](std::span<const int> y) {
    std::vector<int> count(static_cast<std::size_t>(q), 0);
    for (int c : y) ++count[static_cast<std::size_t>(c)];
    Complex acc = 0.0;
    for (int n : count) acc += std::pow(w, n);
    return acc;
  });
  const Complex scale = qpow(q, -static_cast<double>(g.edge_count() + g.vertex_count())) *
                        std::pow(s - 1.0, static_cast<int>(2 * g.edge_count()));
  return scaled_value(uniform_edge_model(g, std::move(family), limits), scale);
}

ModelValue flow_cubic_edge_value(const Multigraph& g, int q, EvalLimits limits) {
  require_cubic(g, "cubic flow model");
  const Group grp = Group::cyclic(q);
  const double mono_weight = 1.0 - q;
  const double clash_weight = 1.0 - q / 2.0;
  auto family = ArityFamily::tabulate(grp, std::vector<int>{3}, [&](std::span<const int> y) {
    const bool mono = y[0] == y[1] && y[1] == y[2];
    const bool rainbow = y[0] != y[1] && y[1] != y[2] && y[0] != y[2];
    return 2.0 * (mono ? mono_weight : 1.0) * (rainbow ? 1.0 : clash_weight);
  });
  return scaled_value(uniform_edge_model(g, std::move(family), limits), qpow(q, -static_cast<double>(g.edge_count())));
}

long long flow_cubic_edge_model(const Multigraph& g, int q, double tol, EvalLimits limits) {
  const ModelValue v = flow_cubic_edge_value(g, q, limits);
  if (v.integer_residual() > tol)
    throw Mismatch("cubic flow model: value is not an integer within " + std::to_string(tol));
  return v.nearest_integer();
}

SpectralFactor szegedy_decompose(const RealMatrix& g, double threshold) {
  if (g.rows() != g.cols()) throw InvalidArgument("spectral factor: weight matrix must be square");
  const double scale = std::max(1.0, g.cwiseAbs().maxCoeff());
  if ((g - g.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
    throw InvalidArgument("spectral factor: weight matrix must be symmetric");

  Eigen::SelfAdjointEigenSolver<RealMatrix> solver(g);
  if (solver.info() != Eigen::Success) throw Error("spectral factor: eigendecomposition failed");
  const auto n = g.rows();
  const Eigen::VectorXd ascending = solver.eigenvalues();
  const RealMatrix vectors = solver.eigenvectors();
  const double norm = ascending.size() ? ascending.cwiseAbs().maxCoeff() : 0.0;

  SpectralFactor out;
  out.h = ComplexMatrix::Zero(n, n);
  out.eigenvalues.resize(n);
  for (Eigen::Index c = 0; c < n; ++c) {
    const Eigen::Index src = n - 1 - c;
    const double lambda = ascending(src);
    out.eigenvalues(c) = lambda;
    if (std::abs(lambda) < threshold * norm || lambda == 0.0) continue;
    Eigen::VectorXd col = vectors.col(src);
    Eigen::Index pivot = 0;
    for (Eigen::Index a = 1; a < n; ++a)
      if (std::abs(col(a)) > std::abs(col(pivot)) + 1e-12) pivot = a;
    if (col(pivot) < 0) col = -col;
    const Complex root = std::sqrt(Complex(lambda, 0.0));
    out.h.col(c) = col.cast<Complex>() * root;
    ++out.rank;
  }
  const ComplexMatrix rebuilt = out.h * out.h.transpose();
  out.reconstruction_residual = (rebuilt - g.cast<Complex>()).cwiseAbs().maxCoeff();
  return out;
}

ModelValue szegedy_vertex_model(const Multigraph& g, const QFunction& vertex_weight, const RealMatrix& edge_weight,
                                EvalLimits limits) {
  require_weight(vertex_weight, "spectral vertex model");
  const Group& grp = vertex_weight.group();
  if (edge_weight.rows() != grp.order() || edge_weight.cols() != grp.order())
    throw InvalidArgument("spectral vertex model: edge weight must be q x q");
  const QFunction w = QFunction::tabulate(grp, 2, [&](std::span<const int> ab) { return edge_weight(ab[0], ab[1]); });
  return vertex_partition(g, VertexModel{vertex_weight, w}, limits);
}

ModelValue szegedy_edge_model(const Multigraph& g, const QFunction& vertex_weight, const RealMatrix& edge_weight,
                              EvalLimits limits) {
  require_weight(vertex_weight, "spectral edge model");
  const int q = vertex_weight.group().order();
  if (edge_weight.rows() != q || edge_weight.cols() != q)
    throw InvalidArgument("spectral edge model: edge weight must be q x q");
  const SpectralFactor factor = szegedy_decompose(edge_weight);

  std::vector<Eigen::Index> columns;
  for (Eigen::Index c = 0; c < factor.h.cols(); ++c)
    if (factor.h.col(c).cwiseAbs().maxCoeff() > 0.0) columns.push_back(c);
  // A zero weight still needs one (all-zero) colour so isolated vertices keep their sum.
  if (columns.empty()) columns.push_back(0);

  const Group colours = Group::cyclic(static_cast<int>(columns.size()));
  auto family = ArityFamily::tabulate(colours, ArityFamily::degrees_of(g), [&](std::span<const int> y) {
    Complex acc = 0.0;
    for (int a = 0; a < q; ++a) {
      Complex p = vertex_weight[static_cast<std::size_t>(a)];
      for (int c : y) p *= factor.h(a, columns[static_cast<std::size_t>(c)]);
      acc += p;
    }
    return acc;
  });
  return uniform_edge_model(g, std::move(family), limits);
}

void XQParams::validate() const {
  const auto q = static_cast<std::size_t>(group.order());
  if (s.size() != q || t.size() != q) throw InvalidArgument("X_Q weights need one value per group element");
}

bool XQParams::t_symmetric(double tol) const {
  validate();
  double scale = 1.0;
  for (const auto& v : t) scale = std::max(scale, std::abs(v));
  for (int b = 0; b < group.order(); ++b)
    if (std::abs(t[static_cast<std::size_t>(b)] - t[static_cast<std::size_t>(group.neg(b))]) > tol * scale)
      return false;
  return true;
}

ModelValue xq_evaluate(const Multigraph& g, const XQParams& p, EvalLimits limits) {
  p.validate();
  const Group& grp = p.group;
  const QFunction s(grp, 1, p.s);
  const QFunction w = QFunction::tabulate(grp, 2, [&](std::span<const int> th) {
    return p.t[static_cast<std::size_t>(grp.sub(th[1], th[0]))];
  });
  return vertex_partition(g, VertexModel{s, w}, limits);
}

ModelValue xq_dual(const Multigraph& g, const XQParams& p, EvalLimits limits) {
  p.validate();
  const Group& grp = p.group;
  const int q = grp.order();
  const double terms = detail::power_estimate(q, g.edge_count());
  detail::require_terms("X_Q dual q^|E|", terms, limits.max_terms);

  std::vector<Complex> s_hat(static_cast<std::size_t>(q), 0.0), t_hat(static_cast<std::size_t>(q), 0.0);
  for (int a = 0; a < q; ++a)
    for (int c = 0; c < q; ++c) {
      s_hat[static_cast<std::size_t>(a)] += std::conj(grp.character(grp.mul(c, a))) * p.s[static_cast<std::size_t>(c)];
      t_hat[static_cast<std::size_t>(a)] += grp.character(grp.mul(c, a)) * p.t[static_cast<std::size_t>(c)];
    }

  const Complex sum = detail::sum_configurations<Complex>(q, g.edge_count(), [&](std::span<const int> y) {
    thread_local std::vector<int> bd;
    bd.assign(g.vertex_count(), 0);
    Complex prod = 1.0;
    for (std::size_t e = 0; e < y.size(); ++e) {
      bd[g.head(e)] = grp.add(bd[g.head(e)], y[e]);
      bd[g.tail(e)] = grp.sub(bd[g.tail(e)], y[e]);
      prod *= t_hat[static_cast<std::size_t>(y[e])];
    }
    for (int a : bd) prod *= s_hat[static_cast<std::size_t>(a)];
    return prod;
  });
  return {sum * qpow(q, -static_cast<double>(g.edge_count())), static_cast<std::uint64_t>(terms)};
}

XQParams principal_params(int q, Complex s, Complex t) {
  XQParams p{Group::cyclic(q), {}, {}};
  for (int a = 0; a < q; ++a) {
    p.s.push_back(std::pow(s, a));
    p.t.push_back(a == 0 ? t : Complex(1.0));
  }
  return p;
}

namespace {

/// sum over y in Z_q^E of (t-1+q)^{#zero} (t-1)^{#nonzero} prod_v vertex[(dy)_v],
/// optionally restricted to boundaries equal to `only`.
Complex boundary_weighted_sum(const Multigraph& g, int q, Complex t, const std::vector<Complex>& vertex, int only,
                              EvalLimits limits) {
  const Group grp = Group::cyclic(q);
  detail::require_terms("principal specialization q^|E|", detail::power_estimate(q, g.edge_count()), limits.max_terms);
  const Complex zero_weight = t - 1.0 + static_cast<double>(q);
  const Complex other_weight = t - 1.0;
  return detail::sum_configurations<Complex>(q, g.edge_count(), [&](std::span<const int> y) {
    thread_local std::vector<int> bd;
    bd.assign(g.vertex_count(), 0);
    Complex prod = 1.0;
    for (std::size_t e = 0; e < y.size(); ++e) {
      bd[g.head(e)] = grp.add(bd[g.head(e)], y[e]);
      bd[g.tail(e)] = grp.sub(bd[g.tail(e)], y[e]);
      prod *= y[e] == 0 ? zero_weight : other_weight;
    }
    for (int a : bd) {
      if (only >= 0 && a != only) return Complex(0.0);
      prod *= vertex[static_cast<std::size_t>(a)];
    }
    return prod;
  });
}

}  // namespace

Complex principal_root_free(const Multigraph& g, int q, Complex s, Complex t, EvalLimits limits) {
  std::vector<Complex> vertex;
  const Complex numerator = std::pow(s, q) - 1.0;
  for (int a = 0; a < q; ++a) vertex.push_back(numerator / (s * std::polar(1.0, 2.0 * kPi * a / q) - 1.0));
  return qpow(q, -static_cast<double>(g.edge_count())) * boundary_weighted_sum(g, q, t, vertex, -1, limits);
}

Complex principal_root(const Multigraph& g, int q, int c, Complex t, EvalLimits limits) {
  if (c < 0 || c >= q) throw InvalidArgument("principal specialization: root index outside Z_q");
  const std::vector<Complex> vertex(static_cast<std::size_t>(q), 1.0);
  const double exponent = static_cast<double>(g.vertex_count()) - static_cast<double>(g.edge_count());
  return qpow(q, exponent) * boundary_weighted_sum(g, q, t, vertex, c, limits);
}

PrincipalValue principal_specialization(const Multigraph& g, int q, Complex s, Complex t, EvalLimits limits) {
  PrincipalValue out;
  if (std::abs(std::pow(s, q) - 1.0) < 1e-9) {
    out.branch = 2;
    const long c = std::lround(-std::arg(s) * q / (2.0 * kPi));
    out.root = static_cast<int>(((c % q) + q) % q);
    out.value = principal_root(g, q, out.root, t, limits);
  } else {
    out.branch = 1;
    out.value = principal_root_free(g, q, s, t, limits);
  }
  return out;
}

ConvolutionRoot convolution_root(const Group& group, std::span<const Complex> t) {
  const int q = group.order();
  if (t.size() != static_cast<std::size_t>(q)) throw InvalidArgument("convolution root: one weight per element");
  double scale = 1.0;
  for (const auto& v : t) scale = std::max(scale, std::abs(v));
  for (int b = 0; b < q; ++b)
    if (std::abs(t[static_cast<std::size_t>(b)] - t[static_cast<std::size_t>(group.neg(b))]) > 1e-12 * scale)
      throw InvalidArgument("convolution root: edge weights must satisfy t_b = t_{-b}");

  QFunction t_hat = fourier(QFunction(group, 1, std::vector<Complex>(t.begin(), t.end())));
  for (std::size_t i = 0; i < t_hat.size(); ++i) t_hat[i] = std::pow(static_cast<double>(q), -0.25) * std::sqrt(t_hat[i]);
  const QFunction u = inverse_fourier(t_hat);

  ConvolutionRoot out{u.values(), 0.0};
  for (int b = 0; b < q; ++b) {
    Complex acc = 0.0;
    for (int a = 0; a < q; ++a) acc += u[static_cast<std::size_t>(a)] * u[static_cast<std::size_t>(group.sub(a, b))];
    out.residual = std::max(out.residual, std::abs(acc - t[static_cast<std::size_t>(b)]));
  }
  return out;
}

ModelValue xq_edge_model(const Multigraph& g, const XQParams& p, EvalLimits limits) {
  p.validate();
  const Group& grp = p.group;
  const int q = grp.order();
  const ConvolutionRoot root = convolution_root(grp, p.t);
  double scale = 1.0;
  for (const auto& v : p.t) scale = std::max(scale, std::abs(v));
  if (root.residual > 1e-9 * scale) throw Mismatch("X_Q edge model: convolution root does not reconstruct t");

  auto family = ArityFamily::tabulate(grp, ArityFamily::degrees_of(g), [&](std::span<const int> y) {
    Complex acc = 0.0;
    for (int a = 0; a < q; ++a) {
      Complex prod = p.s[static_cast<std::size_t>(a)];
      for (int c : y) prod *= root.u[static_cast<std::size_t>(grp.sub(c, a))];
      acc += prod;
    }
    return acc;
  });
  return uniform_edge_model(g, std::move(family), limits);
}

SidePair fg4_identity(const Multigraph& g, Complex s, Complex t, EvalLimits limits) {
  require_cubic(g, "F4 identity");
  const Group f4 = Group::f4();
  const std::vector<Complex> w = {1.0 + s + t, 1.0 - s - t, -1.0 - s + t, -1.0 + s - t};
  const QFunction edge = QFunction::tabulate(f4, 2, [&](std::span<const int> ab) {
    return w[static_cast<std::size_t>(f4.add(ab[0], ab[1]))];
  });
  const ModelValue sum = vertex_partition(g, VertexModel{constant(f4, 1, 1.0), edge}, limits);
  const double flows = flow_polynomial(g, 4, limits).convert_to<double>();
  const Complex lhs = std::pow(s * t, static_cast<int>(g.edge_count() / 3)) * flows;
  return {lhs, sum.value * qpow(4, -static_cast<double>(g.vertex_count()))};
}

bool fg4_identity_check(const Multigraph& g, Complex s, Complex t, double tol, EvalLimits limits) {
  return fg4_identity(g, s, t, limits).relative_residual() <= tol;
}

}  // namespace ecm
