#include "ecm/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>

#include <json.hpp>

#include "ecm/duality.hpp"
#include "ecm/error.hpp"
#include "ecm/oracles.hpp"
#include "ecm/signed.hpp"

namespace ecm {

namespace {

constexpr double kPi = std::numbers::pi;

/// Gate for the exhaustive cross-checks of the duality suite.
constexpr double kDualityGate = 1e6;

double relative(Complex a, Complex b) {
  return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string fmt(double v) {
  std::ostringstream out;
  out << v;
  return out.str();
}

std::string fmt(Complex v) {
  std::ostringstream out;
  out << v.real();
  if (v.imag() != 0.0) out << (v.imag() < 0 ? "-" : "+") << std::abs(v.imag()) << "i";
  return out.str();
}

Complex to_complex(const BigInt& v) { return Complex(static_cast<double>(v), 0.0); }
Complex to_complex(const Rational& v) { return Complex(to_double(v), 0.0); }

Rational power(const Rational& base, unsigned e) {
  Rational out = 1;
  for (unsigned i = 0; i < e; ++i) out *= base;
  return out;
}

class Battery {
 public:
  Battery(const VerifyOptions& opts, Report& report) : opts_(opts), report_(report) {
    limits_.max_terms = opts.max_terms;
  }

  EvalLimits limits() const { return limits_; }
  double tol(double pinned) const { return pinned * (opts_.tol / 1e-7); }

  std::mt19937_64 rng(const std::string& tag) const {
    std::seed_seq seq{static_cast<std::uint32_t>(opts_.seed), static_cast<std::uint32_t>(opts_.seed >> 32),
                      static_cast<std::uint32_t>(fnv1a(tag)), static_cast<std::uint32_t>(fnv1a(tag) >> 32)};
    return std::mt19937_64(seq);
  }

  /// Graphs for a check: the caller's graphs, or the named corpus members.
  std::vector<corpus::Entry> graphs(std::initializer_list<const char*> names) const {
    if (!opts_.graphs.empty()) return opts_.graphs;
    std::vector<corpus::Entry> out;
    for (const char* n : names) out.push_back({n, corpus::by_name(n)});
    return out;
  }

  std::vector<int> qs(std::initializer_list<int> defaults) const {
    if (!opts_.qs.empty()) return opts_.qs;
    return defaults;
  }

  void record(const std::string& name, const std::string& anchor, const std::string& inputs, Complex lhs, Complex rhs,
              double residual, double tolerance, const std::string& note = {}) {
    Check c;
    c.name = name;
    c.anchor = anchor;
    c.inputs = inputs;
    c.lhs = lhs;
    c.rhs = rhs;
    c.residual = residual;
    c.tolerance = tolerance;
    c.pass = std::isfinite(residual) && residual <= tolerance;
    c.note = note;
    report_.checks.push_back(std::move(c));
  }

  /// Relative comparison |lhs - rhs| / max(1, |lhs|, |rhs|).
  void compare(const std::string& name, const std::string& anchor, const std::string& inputs, Complex lhs,
               Complex rhs, double pinned) {
    record(name, anchor, inputs, lhs, rhs, relative(lhs, rhs), tol(pinned));
  }

  void exact(const std::string& name, const std::string& anchor, const std::string& inputs, long long lhs,
             long long rhs) {
    record(name, anchor, inputs, Complex(static_cast<double>(lhs)), Complex(static_cast<double>(rhs)),
           std::abs(static_cast<double>(lhs - rhs)), 0.0);
  }

  void skip(const std::string& name, const std::string& anchor, const std::string& inputs, const std::string& why) {
    Check c;
    c.name = name;
    c.anchor = anchor;
    c.inputs = inputs;
    c.skipped = true;
    c.note = why;
    report_.checks.push_back(std::move(c));
  }

  /// Runs body; a term-cap refusal or unmet precondition becomes a skip record
  /// and any other library error a failed record.
  void guarded(const std::string& name, const std::string& anchor, const std::string& inputs,
               const std::function<void()>& body) {
    try {
      body();
    } catch (const CapExceeded& e) {
      skip(name, anchor, inputs, e.what());
    } catch (const InvalidArgument& e) {
      skip(name, anchor, inputs, e.what());
    } catch (const std::exception& e) {
      record(name, anchor, inputs, Complex(std::nan("")), Complex(std::nan("")), std::nan(""), 0.0, e.what());
    }
  }

 private:
  const VerifyOptions& opts_;
  Report& report_;
  EvalLimits limits_;
};

Complex random_complex(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const double re = u(rng);
  return {re, u(rng)};
}

QFunction random_function(const Group& grp, int arity, std::mt19937_64& rng) {
  return QFunction::tabulate(grp, arity, [&](std::span<const int>) { return random_complex(rng); });
}

std::string graph_inputs(const corpus::Entry& e, const std::string& extra = {}) {
  return "graph=" + e.name + (extra.empty() ? "" : " " + extra);
}

bool small_enough(const Multigraph& g, int q) { return std::pow(q, static_cast<double>(g.edge_count())) <= kDualityGate; }

// ---------------------------------------------------------------- fourier

void fourier_suite(Battery& b) {
  const std::vector<Group> groups = {Group::cyclic(2), Group::cyclic(3), Group::cyclic(4), Group::cyclic(5),
                                     Group::product({2, 2}), Group::product({2, 3}), Group::f4()};
  for (const auto& grp : groups) {
    const std::string in = "group=" + grp.spec();
    const int q = grp.order();
    auto rng = b.rng("fourier/" + grp.spec());

    const ComplexMatrix fm = fourier_matrix(grp);
    const double unitary = (fm * fm.adjoint() - ComplexMatrix::Identity(q, q)).cwiseAbs().maxCoeff();
    b.record("fourier.unitary", "F F* = I", in, unitary, 0.0, unitary, b.tol(1e-10));

    for (int d = 1; d <= 2; ++d) {
      const std::string ind = in + " arity=" + std::to_string(d);
      const QFunction f = random_function(grp, d, rng);
      const QFunction g = random_function(grp, d, rng);
      const QFunction ff = fourier(f);
      const double scale = std::pow(static_cast<double>(q), d / 2.0);

      double r = max_abs_diff(fourier(ff), negate(f));
      b.record("fourier.square_is_negation", "F^2 = N", ind, r, 0.0, r, b.tol(1e-10));

      r = max_abs_diff(fourier(negate(f)), negate(ff));
      b.record("fourier.commutes_with_negation", "F N = N F", ind, r, 0.0, r, b.tol(1e-10));

      r = max_abs_diff(inverse_fourier(ff), f);
      b.record("fourier.inverse", "F^-1 F = I", ind, r, 0.0, r, b.tol(1e-10));

      const Complex lhs = hermitian_inner(ff, fourier(g));
      b.compare("fourier.parseval", "<f^F, g^F> = <f, g>", ind, lhs, hermitian_inner(f, g), 1e-10);

      r = max_abs_diff(fourier(convolve(f, g)), scaled(pointwise(ff, fourier(g)), scale));
      b.record("fourier.convolution", "(f * g)^F = q^{d/2} f^F g^F", ind, r, 0.0, r, b.tol(1e-9));

      r = max_abs_diff(fourier(pointwise(f, g)), scaled(convolve(ff, fourier(g)), 1.0 / scale));
      b.record("fourier.pointwise", "(f g)^F = q^{-d/2} f^F * g^F", ind, r, 0.0, r, b.tol(1e-9));
    }

    // Indicator of a submodule goes to a multiple of the orthogonal one.
    const QFunction mono = monochrome_indicator(grp, 2);
    const QFunction perp = orthogonal_submodule(mono);
    double r = max_abs_diff(perp, zero_sum_indicator(grp, 2));
    b.record("fourier.orthogonal_of_monochrome", "Monochrome^perp = Zero-sum", in, r, 0.0, r, 0.0);
    r = max_abs_diff(fourier(mono), scaled(perp, static_cast<double>(q) / q));
    b.record("fourier.indicator_transform", "(1_C)^F = q^{-d/2} |C| 1_{C^perp}", in + " C=Monochrome(2)", r, 0.0, r,
             b.tol(1e-10));
  }

  // Determinant of the unnormalised Fourier matrix.
  for (int q = 1; q <= 8; ++q) {
    const Complex closed = det_fourier_closed(q);
    const Complex numeric = det_fourier_numeric(q);
    b.compare("fourier.determinant", "det[exp(2 pi i l m / q)] = i^{(q-1)(3q-2)/2} q^{q/2}",
              "q=" + std::to_string(q), closed, numeric, 1e-8);
  }

  // Closed forms of the transformed parity functions.
  const std::pair<int, int> pairs[] = {{2, 3}, {2, 4}, {3, 4}, {3, 5}, {4, 5}};
  for (auto [k, q] : pairs) {
    const std::string in = "k=" + std::to_string(k) + " q=" + std::to_string(q);
    const QFunction brute = fourier(parity_function(ColourSet::centred(q, k), ColourOrder::symmetric));
    double worst = 0.0;
    std::vector<int> t(static_cast<std::size_t>(k));
    for (std::size_t i = 0; i < brute.size(); ++i) {
      brute.decode(i, t);
      worst = std::max(worst, std::abs(parity_fourier_closed(k, q, t) - brute[i]));
    }
    b.record("parity.centred_closed_form", "transform of the centred parity function = sine product (cosine sum)",
             in + " K=centred order=symmetric", worst, 0.0, worst, b.tol(1e-9));
    if (q != k + 1) continue;
    const QFunction brute1 = fourier(parity_function(ColourSet::one_extra(k), ColourOrder::residue));
    worst = 0.0;
    for (std::size_t i = 0; i < brute1.size(); ++i) {
      brute1.decode(i, t);
      worst = std::max(worst, std::abs(parity_fourier_kplus1(k, t) - brute1[i]));
    }
    b.record("parity.one_extra_closed_form", "transform of the parity function on Z_{k+1} minus one colour",
             in + " order=residue", worst, 0.0, worst, b.tol(1e-9));
  }

  // Orthogonal invariance of the monochrome pairing.
  for (int q : b.qs({2, 3})) {
    for (const auto& e : b.graphs({"triangle", "theta", "k4", "prism"})) {
      for (int draw = 0; draw < 5; ++draw) {
        const std::string in = graph_inputs(e, "q=" + std::to_string(q) + " draw=" + std::to_string(draw));
        b.guarded("invariance.orthogonal", "(f^{(x)V}, 1_Mono^{(x)E}) = ((f^U)^{(x)V}, 1_Mono^{(x)E})", in, [&] {
          auto rng = b.rng("invariance/" + in);
          const Group grp = Group::cyclic(q);
          ArityFamily fam(grp);
          for (int d : ArityFamily::degrees_of(e.graph)) fam.set(random_function(grp, d, rng));
          const RealMatrix u = random_orthogonal(q, rng());
          const auto res = orthogonal_invariance_check(e.graph, fam, u, b.tol(1e-9), b.limits());
          b.compare("invariance.orthogonal", "(f^{(x)V}, 1_Mono^{(x)E}) = ((f^U)^{(x)V}, 1_Mono^{(x)E})", in,
                    res.lhs, res.rhs, 1e-9);
          b.record("invariance.monochrome_fixed", "(U (x) U) 1_Mono = 1_Mono", in, res.monochrome_fixed_residual, 0.0,
                   res.monochrome_fixed_residual, b.tol(1e-10));
        });
      }
    }
  }
}

// ---------------------------------------------------------------- duality

void duality_suite(Battery& b) {
  const auto everything = {"single_edge", "single_loop", "digon",    "triangle", "c4",      "theta",
                           "k4",          "prism",       "k33",      "octahedron", "petersen"};

  // Tutte polynomial on the hyperbola.
  for (const auto& e : b.graphs(everything)) {
    std::optional<TuttePolynomial> tp;
    b.guarded("hyperbola.tutte", "subset expansion", graph_inputs(e), [&] { tp = tutte(e.graph, b.limits()); });
    if (!tp) continue;
    const auto r = static_cast<unsigned>(rank(e.graph));
    const auto m = static_cast<unsigned>(e.graph.edge_count());
    for (int q : b.qs({2, 3, 4})) {
      if (!small_enough(e.graph, q)) {
        b.skip("hyperbola.edge_model", "tutte edge model", graph_inputs(e, "q=" + std::to_string(q)),
               "q^|E| above the 1e6 gate");
        continue;
      }
      const Group grp = Group::cyclic(q);
      std::vector<Colouring> flows, tensions;
      b.guarded("hyperbola.flows", "enumerate flows and tensions", graph_inputs(e, "q=" + std::to_string(q)), [&] {
        flows = enumerate_flows(e.graph, grp, b.limits());
        tensions = enumerate_tensions(e.graph, grp, b.limits());
      });
      if (flows.empty()) continue;
      for (int s : {2, 3}) {
        const std::string in = graph_inputs(e, "q=" + std::to_string(q) + " s=" + std::to_string(s));
        const Rational on_curve = hyperbola_value(e.graph, *tp, q, Rational(s * s));
        b.guarded("hyperbola.edge_model", "edge model = (s^2-1)^{|E|-r} T(s^2, (s^2-1+q)/(s^2-1))", in, [&] {
          const auto v = tutte_edge_model(e.graph, q, Complex(s), b.limits());
          b.compare("hyperbola.edge_model", "edge model = (s^2-1)^{|E|-r} T(s^2, (s^2-1+q)/(s^2-1))", in, v.value,
                    to_complex(on_curve), 1e-7);
        });
        const Rational hwe_flows = hwe(flows, Rational(s * s));
        b.compare("hyperbola.flow_enumerator", "hwe(ker d; s) = (s-1)^{|E|-r} T(s, (s-1+q)/(s-1))",
                  graph_inputs(e, "q=" + std::to_string(q) + " s=" + std::to_string(s * s)), to_complex(hwe_flows),
                  to_complex(on_curve), 1e-12);

        const int t = s;
        const Rational tm1(t - 1);
        const Rational tension_side = power(tm1, r) * tp->evaluate((tm1 + q) / tm1, Rational(t));
        const Rational hwe_tensions = hwe(tensions, Rational(t));
        const std::string tin = graph_inputs(e, "q=" + std::to_string(q) + " t=" + std::to_string(t));
        b.compare("hyperbola.tension_enumerator", "hwe(im delta; t) = (t-1)^r T((t-1+q)/(t-1), t)", tin,
                  to_complex(hwe_tensions), to_complex(tension_side), 1e-12);
        b.guarded("hyperbola.monochrome", "q^{k(G)} hwe(im delta; t) = monochrome polynomial", tin, [&] {
          const Complex mono = monochrome_polynomial(e.graph, q, Complex(t), b.limits());
          const Rational k = static_cast<long>(components(e.graph));
          b.compare("hyperbola.monochrome", "q^{k(G)} hwe(im delta; t) = monochrome polynomial", tin,
                    to_complex(hwe_tensions) * std::pow(static_cast<double>(q), to_double(k)), mono, 1e-12);
        });
        (void)m;
      }
    }
  }

  // Flow and tension enumerators from vertex and edge models.
  for (const auto& e : b.graphs(everything)) {
    for (int q : b.qs({2, 3})) {
      const std::string qin = graph_inputs(e, "q=" + std::to_string(q));
      if (!small_enough(e.graph, q)) {
        b.skip("cwe.vertex_route", "flow enumerator vertex model", qin, "q^|E| above the 1e6 gate");
        continue;
      }
      const Group grp = Group::cyclic(q);
      std::vector<Colouring> flows, tensions;
      b.guarded("cwe.enumerate", "enumerate flows and tensions", qin, [&] {
        flows = enumerate_flows(e.graph, grp, b.limits());
        tensions = enumerate_tensions(e.graph, grp, b.limits());
      });
      if (flows.empty()) continue;
      for (int draw = 0; draw < 5; ++draw) {
        const std::string in = qin + " draw=" + std::to_string(draw);
        auto rng = b.rng("cwe/" + in);
        const QFunction w = random_function(grp, 1, rng);
        const QFunction target = flow_model_target_weight(w);
        const Complex oracle = cwe(flows, target.values());
        b.guarded("cwe.vertex_route", "cwe(ker d; g g^N) as a vertex model", in, [&] {
          b.compare("cwe.vertex_route", "cwe(ker d; g g^N) as a vertex model", in,
                    cwe_flow_vertex_model(e.graph, w, b.limits()).value, oracle, 1e-7);
        });
        b.guarded("cwe.edge_route", "cwe(ker d; g g^N) as an edge model", in, [&] {
          b.compare("cwe.edge_route", "cwe(ker d; g g^N) as an edge model", in,
                    cwe_flow_edge_model(e.graph, w, b.limits()).value, oracle, 1e-7);
        });
        const Complex tension_oracle = cwe(tensions, tension_target_weight(w).values());
        b.guarded("cwe.tension_expectation", "cwe(im delta; f * f^N) as an expectation", in, [&] {
          b.compare("cwe.tension_expectation", "cwe(im delta; f * f^N) as an expectation", in,
                    cwe_tension_expectation(e.graph, w, b.limits()).value, tension_oracle, 1e-7);
        });
      }
    }
  }

  // Generalised Poisson summation and MacWilliams.
  for (const auto& e : b.graphs(everything)) {
    for (int q : b.qs({2, 3, 4})) {
      const std::string qin = graph_inputs(e, "q=" + std::to_string(q));
      if (!small_enough(e.graph, q) || std::pow(q, static_cast<double>(e.graph.vertex_count())) > kDualityGate) {
        b.skip("poisson.general", "generalised Poisson summation", qin, "q^|E| or q^|V| above the 1e6 gate");
        continue;
      }
      const Group grp = Group::cyclic(q);
      for (int draw = 0; draw < 5; ++draw) {
        const std::string in = qin + " draw=" + std::to_string(draw);
        auto rng = b.rng("poisson/" + in);
        std::vector<QFunction> f, h;
        for (std::size_t v = 0; v < e.graph.vertex_count(); ++v) f.push_back(random_function(grp, 1, rng));
        for (std::size_t i = 0; i < e.graph.edge_count(); ++i) h.push_back(random_function(grp, 1, rng));
        b.guarded("poisson.general", "vertex sum with f, conj(g) on delta x = dual sum with f^F, conj(g^F)", in, [&] {
          const auto sides = general_duality(e.graph, f, h, b.limits());
          b.record("poisson.general", "vertex sum with f, conj(g) on delta x = dual sum with f^F, conj(g^F)", in,
                   sides.lhs, sides.rhs, sides.relative_residual(), b.tol(1e-8));
        });
        const QFunction w = random_function(grp, 1, rng);
        b.guarded("poisson.macwilliams", "cwe(ker d; h) = q^{-|E|/2} |ker d| cwe(im delta; h^F)", in, [&] {
          const auto sides = macwilliams(e.graph, w, b.limits());
          b.record("poisson.macwilliams", "cwe(ker d; h) = q^{-|E|/2} |ker d| cwe(im delta; h^F)", in, sides.lhs,
                   sides.rhs, sides.relative_residual(), b.tol(1e-8));
        });
      }
    }
  }

  // Flow polynomial of a cubic graph from an edge model.
  for (const auto& e : b.graphs({"theta", "k4", "prism", "k33", "petersen"})) {
    if (!e.graph.is_regular(3)) {
      b.skip("cubic.flow_edge_model", "F(G;q) from the cubic edge model", graph_inputs(e), "graph is not cubic");
      continue;
    }
    std::optional<TuttePolynomial> tp;
    b.guarded("cubic.tutte", "subset expansion", graph_inputs(e), [&] { tp = tutte(e.graph, b.limits()); });
    if (!tp) continue;
    for (int q : b.qs({2, 3, 4, 5})) {
      const std::string in = graph_inputs(e, "q=" + std::to_string(q));
      if (e.name == "petersen" && q > 3) {
        b.skip("cubic.flow_edge_model", "F(G;q) from the cubic edge model", in, "Petersen is checked at q <= 3");
        continue;
      }
      b.guarded("cubic.flow_edge_model", "F(G;q) from the cubic edge model", in, [&] {
        const auto v = flow_cubic_edge_value(e.graph, q, b.limits());
        const BigInt flow = flow_polynomial(e.graph, *tp, q);
        b.record("cubic.flow_edge_model", "q^{-|E|} 2^{|V|} sum (1-q)^{mono} (1-q/2)^{not rainbow} = F(G;q)", in,
                 v.value, to_complex(flow), std::abs(v.value - to_complex(flow)), b.tol(1e-6));
        b.record("cubic.flow_edge_integrality", "the cubic edge model is an integer", in, v.value,
                 Complex(static_cast<double>(v.nearest_integer())), v.integer_residual(), b.tol(1e-6));
      });
    }
  }

  // Flow polynomial at 4 from an F4 vertex model.
  for (const auto& e : b.graphs({"theta", "k4", "prism"})) {
    std::optional<TuttePolynomial> tp;
    b.guarded("f4.tutte", "subset expansion", graph_inputs(e), [&] { tp = tutte(e.graph, b.limits()); });
    for (auto [s, t] : {std::pair<double, double>{1, 1}, {2, 3}}) {
      const std::string in = graph_inputs(e, "s=" + fmt(s) + " t=" + fmt(t));
      b.guarded("f4.flow_identity", "(st)^{|E|/3} F(G;4) = 4^{-|V|} sum over F4 vertex colourings", in, [&] {
        const auto sides = fg4_identity(e.graph, Complex(s), Complex(t), b.limits());
        b.record("f4.flow_identity", "(st)^{|E|/3} F(G;4) = 4^{-|V|} sum over F4 vertex colourings", in, sides.lhs,
                 sides.rhs, sides.relative_residual(), b.tol(1e-7));
        if (tp && e.graph.edge_count() % 3 == 0) {
          // The left side again, from the Tutte polynomial rather than the flow oracle.
          const Complex lhs = std::pow(Complex(s * t), static_cast<double>(e.graph.edge_count()) / 3.0) *
                              to_complex(flow_polynomial(e.graph, *tp, 4));
          b.compare("f4.flow_identity_tutte", "(st)^{|E|/3} F(G;4) via T(G;0,-3)", in, lhs, sides.rhs, 1e-7);
        }
      });
    }
  }

  // Spectral conversion of a symmetric edge weight.
  for (int q : {2, 3, 4}) {
    for (int draw = 0; draw < 10; ++draw) {
      const std::string in = "q=" + std::to_string(q) + " draw=" + std::to_string(draw);
      auto rng = b.rng("szegedy/" + in);
      std::uniform_real_distribution<double> u(-1.0, 1.0);
      RealMatrix g(q, q);
      if (draw % 2 == 0) {
        for (int i = 0; i < q; ++i)
          for (int j = i; j < q; ++j) g(i, j) = g(j, i) = u(rng);
      } else {
        // Rank-deficient with mixed-sign spectrum.
        const int r = 1 + draw / 2 % std::max(1, q - 1);
        g.setZero();
        for (int c = 0; c < r; ++c) {
          Eigen::VectorXd v(q);
          for (int i = 0; i < q; ++i) v(i) = u(rng);
          g += (c % 2 ? -1.0 : 1.0) * v * v.transpose();
        }
      }
      const auto sf = szegedy_decompose(g);
      b.record("szegedy.reconstruction", "g = h h^T", in, sf.reconstruction_residual, 0.0, sf.reconstruction_residual,
               b.tol(1e-9));
      const Eigen::JacobiSVD<RealMatrix> svd(g);
      const auto& sv = svd.singularValues();
      int numeric_rank = 0;
      for (int i = 0; i < sv.size(); ++i) numeric_rank += sv(i) > 1e-9 * std::max(1e-300, sv(0));
      b.exact("szegedy.rank", "nonzero columns of h = numerical rank of g", in, sf.rank, numeric_rank);
      const QFunction f = random_function(Group::cyclic(q), 1, rng);
      for (const auto& e : b.graphs({"triangle", "theta", "k4"})) {
        const std::string gin = graph_inputs(e, in);
        b.guarded("szegedy.partition", "vertex model with g = edge model with h", gin, [&] {
          b.compare("szegedy.partition", "vertex model with g = edge model with h", gin,
                    szegedy_vertex_model(e.graph, f, g, b.limits()).value,
                    szegedy_edge_model(e.graph, f, g, b.limits()).value, 1e-7);
        });
      }
    }
  }

  // Vertex-weighted monochrome function.
  for (const auto& e : b.graphs({"digon", "triangle", "theta"})) {
    for (int q : b.qs({2, 3, 4})) {
      const std::string qin = graph_inputs(e, "q=" + std::to_string(q));
      auto rng = b.rng("xq/" + qin);
      XQParams p{Group::cyclic(q), {}, {}};
      for (int a = 0; a < q; ++a) p.s.push_back(random_complex(rng));
      for (int a = 0; a < q; ++a) p.t.push_back(random_complex(rng));
      b.guarded("xq.dual", "X_Q = q^{-|E|} sum_y prod s^(dy) prod t^(y)", qin, [&] {
        b.compare("xq.dual", "X_Q = q^{-|E|} sum_y prod s^(dy) prod t^(y)", qin,
                  xq_evaluate(e.graph, p, b.limits()).value, xq_dual(e.graph, p, b.limits()).value, 1e-7);
      });

      const Complex t(1.5, 0.25);
      for (int branch = 1; branch <= 2; ++branch) {
        const Complex s = branch == 1 ? Complex(0.7, 0.2) : std::polar(1.0, -2.0 * kPi / q);
        const std::string in = qin + " s=" + fmt(s) + " t=" + fmt(t);
        b.guarded("xq.principal", "principal specialization as a flow sum", in, [&] {
          const auto pv = principal_specialization(e.graph, q, s, t, b.limits());
          b.compare("xq.principal", "principal specialization as a flow sum", in, pv.value,
                    xq_evaluate(e.graph, principal_params(q, s, t), b.limits()).value, 1e-7);
          b.exact("xq.principal_branch", "branch chosen by s^q = 1", in, pv.branch, branch);
        });
      }

      XQParams sym = p;
      for (int a = 0; a < q; ++a) sym.t[static_cast<std::size_t>(a)] = p.t[static_cast<std::size_t>(a)] + p.t[static_cast<std::size_t>(sym.group.neg(a))];
      b.guarded("xq.edge_model", "X_Q with t_b = t_{-b} as an edge model via t = u * u^N", qin, [&] {
        b.compare("xq.edge_model", "X_Q with t_b = t_{-b} as an edge model via t = u * u^N", qin,
                  xq_edge_model(e.graph, sym, b.limits()).value, xq_evaluate(e.graph, sym, b.limits()).value, 1e-7);
      });

      // The Tutte family t_0 = t^2 - 1 + q, t_b = t^2 - 1 has u_0 = (t-1+q)/sqrt(q), u_b = (t-1)/sqrt(q).
      const double tt = 3.0;
      std::vector<Complex> fam(static_cast<std::size_t>(q), tt * tt - 1.0);
      fam[0] = tt * tt - 1.0 + q;
      const auto root = convolution_root(Group::cyclic(q), fam);
      double worst = root.residual;
      for (int a = 0; a < q; ++a) {
        const double want = (a == 0 ? tt - 1.0 + q : tt - 1.0) / std::sqrt(static_cast<double>(q));
        worst = std::max(worst, std::abs(root.u[static_cast<std::size_t>(a)] - want));
      }
      b.record("xq.convolution_root", "q^{1/2} u_0 = t-1+q, q^{1/2} u_b = t-1 at t=3", "q=" + std::to_string(q),
               root.u[0], (tt - 1.0 + q) / std::sqrt(static_cast<double>(q)), worst, b.tol(1e-12));

      // Principal specialization of the Tutte family as a uniform edge model.
      const Complex s(0.6, -0.3);
      const std::string in = qin + " s=" + fmt(s) + " t=3";
      b.guarded("xq.principal_edge_model", "(t^2-1)^{|E|} X_q(1, s, ..; (t^2-1+q)/(t^2-1)) as an edge model", in, [&] {
        const double m = static_cast<double>(e.graph.edge_count());
        const Complex lhs = std::pow(tt * tt - 1.0, m) *
                            xq_evaluate(e.graph, principal_params(q, s, (tt * tt - 1.0 + q) / (tt * tt - 1.0)),
                                        b.limits()).value;
        const double w = (tt - 1.0 + q) / (tt - 1.0);
        const Group grp = Group::cyclic(q);
        auto family = ArityFamily::tabulate(grp, ArityFamily::degrees_of(e.graph), [&](std::span<const int> y) {
          Complex acc = 0.0;
          for (int a = 0; a < q; ++a) {
            const auto hits = std::count(y.begin(), y.end(), a);
            acc += std::pow(s, a) * std::pow(w, static_cast<double>(hits));
          }
          return acc;
        });
        const auto sum = edge_partition(e.graph, EdgeModel{std::move(family), constant(grp, 1, 1.0)}, b.limits());
        const Complex rhs = std::pow(static_cast<double>(q), -m) * std::pow(tt - 1.0, 2.0 * m) * sum.value;
        b.compare("xq.principal_edge_model", "(t^2-1)^{|E|} X_q(1, s, ..; (t^2-1+q)/(t^2-1)) as an edge model", in,
                  lhs, rhs, 1e-7);
      });
    }
  }
}

// ---------------------------------------------------------------- signed

long long line_graph_colourings(const Multigraph& g, int k, EvalLimits limits) {
  return static_cast<long long>(count_proper_colourings(line_graph(g), k, limits));
}

void signed_suite(Battery& b) {
  // Zero-sum pairing, factorizations and proper colourings.
  for (const auto& e : b.graphs({"digon", "triangle", "c4", "theta", "k4", "prism", "k33", "octahedron"})) {
    const long k = e.graph.regular_degree();
    const std::string in = graph_inputs(e, "k=" + std::to_string(k));
    if (k < 2 || !e.graph.has_rotation()) {
      b.skip("signed.chain", "signed colouring chain", in, "needs a rotation and a regular degree >= 2");
      continue;
    }
    const int kk = static_cast<int>(k);
    b.guarded("signed.chain", "signed colouring chain", in, [&] {
      const auto whole = ColourSet::whole(kk);
      const auto zs = zero_sum_parity_sum(e.graph, whole, ColourOrder::residue, b.limits());
      const auto tm = transformed_monochrome_parity_sum(e.graph, whole, ColourOrder::residue, b.limits());
      const auto mono = monochrome_parity_sum(e.graph, whole, ColourOrder::residue, b.limits());
      const auto fac = factorization_sign_sum(e.graph, whole, b.limits());
      const auto proper = proper_colouring_sign_sum(e.graph, kk, b.limits());
      const long long colourings = line_graph_colourings(e.graph, kk, b.limits());

      b.compare("signed.unitary_transfer", "Zero-sum pairing of f = Monochrome pairing of f^F", in, zs.value,
                tm.value, 1e-9);
      b.exact("signed.factorizations", "Zero-sum pairing = signed count of oriented bipartite (near) 2-factorizations",
              in, zs.nearest_integer(), fac.signed_sum);
      b.exact("signed.proper_sum", "Monochrome pairing = sum of sgn over proper edge k-colourings", in,
              mono.nearest_integer(), proper.signed_sum);
      b.exact("signed.proper_count", "proper edge k-colourings = P(L(G);k)", in,
              static_cast<long long>(proper.count), colourings);
      const long long gap = static_cast<long long>(e.graph.vertex_count()) - static_cast<long long>(e.graph.edge_count());
      if (kk % 2 == 0 && gap % 2 != 0) {
        b.exact("signed.transfer_sign_degenerate", "odd |V|-|E| for even k: both pairings vanish", in,
                zs.nearest_integer(), 0);
      } else {
        const int sign = parity_transfer_sign(kk, static_cast<long long>(e.graph.edge_count()),
                                              static_cast<long long>(e.graph.vertex_count()));
        b.exact("signed.transfer_sign", "Zero-sum pairing = sign(k,|E|,|V|) x Monochrome pairing", in,
                zs.nearest_integer(), sign * mono.nearest_integer());
      }
      if (e.graph.pfaffian_asserted()) {
        b.exact("signed.pfaffian_all_one_sign", "|sum of sgn| = number of proper edge k-colourings", in,
                std::llabs(proper.signed_sum), colourings);
        if (kk == 3)
          b.exact("signed.plane_cubic_sign", "plane cubic, clockwise rotation: sum of sgn = (-1)^{|E|} P(L(G);3)", in,
                  proper.signed_sum, (e.graph.edge_count() % 2 ? -1 : 1) * colourings);
      }
    });
    // The same transfer for the centred colour set one size up.
    const int q = kk + 1;
    const std::string cin = in + " q=" + std::to_string(q) + " K=centred";
    b.guarded("signed.unitary_transfer_centred", "Zero-sum pairing of f = Monochrome pairing of f^F", cin, [&] {
      const auto centred = ColourSet::centred(q, kk);
      const auto zc = zero_sum_parity_sum(e.graph, centred, ColourOrder::symmetric, b.limits());
      const auto tc = transformed_monochrome_parity_sum(e.graph, centred, ColourOrder::symmetric, b.limits());
      b.compare("signed.unitary_transfer_centred", "Zero-sum pairing of f = Monochrome pairing of f^F", cin, zc.value,
                tc.value, 1e-9);
    });
  }

  // The sine edge model.
  struct SineCase {
    const char* name;
    std::vector<int> qs;
  };
  const std::vector<SineCase> sine_cases = {{"k4", {3, 4, 5}}, {"theta", {3, 4, 5}}, {"prism", {3, 4, 5}},
                                            {"k33", {3, 4}},   {"petersen", {3}}};
  std::vector<std::pair<corpus::Entry, std::vector<int>>> sine_inputs;
  if (!b.graphs({}).empty()) {
    for (const auto& e : b.graphs({})) sine_inputs.push_back({e, b.qs({3, 4, 5})});
  } else {
    for (const auto& c : sine_cases) sine_inputs.push_back({{c.name, corpus::by_name(c.name)}, c.qs});
  }
  for (const auto& [e, qs] : sine_inputs) {
    const long k = e.graph.regular_degree();
    if (k < 1 || k % 2 == 0 || !e.graph.has_rotation()) {
      b.skip("signed.sine_model", "sine edge model", graph_inputs(e), "needs a rotation and an odd regular degree");
      continue;
    }
    const int kk = static_cast<int>(k);
    std::optional<long long> colourings;
    b.guarded("signed.sine_oracle", "P(L(G);k)", graph_inputs(e),
              [&] { colourings = line_graph_colourings(e.graph, kk, b.limits()); });
    if (!colourings) continue;
    std::optional<double> first;
    for (int q : qs) {
      const std::string in = graph_inputs(e, "k=" + std::to_string(k) + " q=" + std::to_string(q));
      if (q < kk) continue;
      b.guarded("signed.sine_model", "|q^{-|E|} sum prod 2 sin(pi (y_f - y_e)/q)| = P(L(G);k)", in, [&] {
        const auto v = sine_model(e.graph, q, kk, b.limits());
        if (*colourings == 0) {
          b.record("signed.sine_model_zero", "sine model vanishes without proper colourings", in, v.value, 0.0,
                   std::abs(v.value), b.tol(1e-4));
        } else if (e.graph.pfaffian_asserted()) {
          b.record("signed.sine_model", "|q^{-|E|} sum prod 2 sin(pi (y_f - y_e)/q)| = P(L(G);k)", in, v.magnitude(),
                   static_cast<double>(*colourings), std::abs(v.magnitude() - static_cast<double>(*colourings)),
                   b.tol(1e-5));
        }
        b.record("signed.sine_model_real", "the sine model is real", in, v.value, v.value.real(), v.imag_residual(),
                 b.tol(1e-6));
        if (!first) {
          first = v.magnitude();
        } else {
          b.compare("signed.sine_q_independence", "|sine model| does not depend on q >= k", in, v.magnitude(), *first,
                    1e-6);
        }
      });
    }
  }

  // The k+1 sign sum and the cubic 4-colouring parity count.
  for (const auto& e : b.graphs({"c4", "triangle", "digon", "theta", "k4", "prism"})) {
    const long k = e.graph.regular_degree();
    const std::string in = graph_inputs(e, "k=" + std::to_string(k));
    if (k < 2 || !e.graph.has_rotation()) {
      b.skip("signed.kplus1", "k+1 sign sum", in, "needs a rotation and a regular degree >= 2");
      continue;
    }
    const int kk = static_cast<int>(k);
    b.guarded("signed.kplus1", "|(k+1)^{-|V|/2} sum over Z_{k+1}^E of sgn| = P(L(G);k)", in, [&] {
      const auto v = kplus1_sign_sum(e.graph, kk, b.limits());
      const long long colourings = line_graph_colourings(e.graph, kk, b.limits());
      if (e.graph.pfaffian_asserted() || colourings == 0)
        b.record("signed.kplus1", "|(k+1)^{-|V|/2} sum over Z_{k+1}^E of sgn| = P(L(G);k)", in, v.magnitude(),
                 static_cast<double>(colourings), std::abs(v.magnitude() - static_cast<double>(colourings)),
                 b.tol(1e-9));
      const auto proper = proper_colouring_sign_sum(e.graph, kk, b.limits());
      b.compare("signed.kplus1_matches_proper", "k+1 sign sum = sum of sgn over proper edge k-colourings", in,
                v.value, static_cast<double>(proper.signed_sum), 1e-9);
    });
    if (kk != 3) continue;
    b.guarded("signed.even_minus_odd", "#even - #odd proper edge 4-colourings = (-4)^{|E|/3} F(G;4)", in, [&] {
      if (!e.graph.pfaffian_asserted()) throw InvalidArgument("needs a clockwise plane rotation");
      const auto p = even_minus_odd_proper4(e.graph, b.limits());
      const BigInt flow = flow_polynomial(e.graph, tutte(e.graph, b.limits()), 4);
      const long long want =
          static_cast<long long>(std::llround(std::pow(-4.0, static_cast<double>(e.graph.edge_count()) / 3.0))) *
          static_cast<long long>(flow);
      b.exact("signed.even_minus_odd", "#even - #odd proper edge 4-colourings = (-4)^{|E|/3} F(G;4)", in,
              p.difference, want);
    });
  }

  // Rotation covariance: one adjacent swap negates every signed quantity.
  for (const auto& e : b.graphs({"k4", "theta", "c4"})) {
    const long k = e.graph.regular_degree();
    const std::string in = graph_inputs(e, "k=" + std::to_string(k) + " swap at vertex 0");
    if (k < 2 || !e.graph.has_rotation() || e.graph.vertex_count() == 0) {
      b.skip("signed.rotation_covariance", "adjacent swap negates signed sums", in, "needs a rotation");
      continue;
    }
    const int kk = static_cast<int>(k);
    b.guarded("signed.rotation_covariance", "adjacent swap negates signed sums", in, [&] {
      std::vector<std::vector<HalfEdge>> order(e.graph.vertex_count());
      for (std::size_t v = 0; v < order.size(); ++v) {
        const auto hs = e.graph.half_edges_at(v);
        order[v].assign(hs.begin(), hs.end());
      }
      std::swap(order[0][0], order[0][1]);
      const Multigraph swapped = e.graph.with_rotation(order);
      const auto before = proper_colouring_sign_sum(e.graph, kk, b.limits());
      const auto after = proper_colouring_sign_sum(swapped, kk, b.limits());
      b.exact("signed.rotation_covariance_proper", "adjacent swap negates the proper colouring sign sum", in,
              after.signed_sum, -before.signed_sum);
      const auto kb = kplus1_sign_sum(e.graph, kk, b.limits());
      const auto ka = kplus1_sign_sum(swapped, kk, b.limits());
      b.compare("signed.rotation_covariance_kplus1", "adjacent swap negates the k+1 sign sum", in, ka.value,
                -kb.value, 1e-9);
      if (kk % 2) {
        const auto sb = sine_model(e.graph, kk, kk, b.limits());
        const auto sa = sine_model(swapped, kk, kk, b.limits());
        b.compare("signed.rotation_covariance_sine", "adjacent swap negates the sine model", in, sa.value, -sb.value,
                  1e-9);
      }
    });
  }

  // Trivial products on the single edge.
  {
    const auto g = corpus::single_edge();
    for (int q : {2, 3}) {
      const std::string in = "graph=single_edge q=" + std::to_string(q);
      const long long sum = signed_colouring_sum(g, q, b.limits());
      b.exact("signed.single_edge", "single edge: every colouring has sign +1", in, sum, q);
      const auto proper = proper_colouring_sign_sum(g, q, b.limits());
      b.exact("signed.single_edge_proper", "single edge: q proper colourings, all positive", in, proper.signed_sum, q);
    }
  }

  // Closed-form sign of the transfer.
  const struct {
    int k;
    long long edges, vertices;
    int want;
  } transfer[] = {{3, 6, 4, 1}, {3, 9, 6, -1}, {2, 4, 4, 1}};
  for (const auto& t : transfer)
    b.exact("signed.transfer_sign_formula", "(-1)^{((k-1)/2)|E|}, (-1)^{(k/2)|E| + (|V|-|E|)/2}",
            "k=" + std::to_string(t.k) + " E=" + std::to_string(t.edges) + " V=" + std::to_string(t.vertices),
            parity_transfer_sign(t.k, t.edges, t.vertices), t.want);
}

}  // namespace

std::size_t Report::evaluated() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.skipped; }));
}

std::size_t Report::skipped() const { return checks.size() - evaluated(); }

std::size_t Report::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.skipped && !c.pass; }));
}

std::string Report::to_jsonl() const {
  std::string out;
  auto number = [](double v) -> nlohmann::json {
    if (std::isfinite(v)) return v;
    return nullptr;
  };
  for (const auto& c : checks) {
    nlohmann::json j;
    j["name"] = c.name;
    j["anchor"] = c.anchor;
    j["inputs"] = c.inputs;
    j["lhs"] = {number(c.lhs.real()), number(c.lhs.imag())};
    j["rhs"] = {number(c.rhs.real()), number(c.rhs.imag())};
    j["residual"] = number(c.residual);
    j["tolerance"] = c.tolerance;
    j["pass"] = c.pass;
    j["skipped"] = c.skipped;
    if (!c.note.empty()) j["note"] = c.note;
    out += j.dump();
    out += '\n';
  }
  return out;
}

std::vector<std::string> suite_names() { return {"all", "fourier", "duality", "signed"}; }

Report verify(const VerifyOptions& options) {
  const auto names = suite_names();
  if (std::find(names.begin(), names.end(), options.suite) == names.end())
    throw InvalidArgument("unknown suite '" + options.suite + "'");
  if (!(options.tol > 0.0)) throw InvalidArgument("tolerance must be positive");
  for (int q : options.qs)
    if (q < 2) throw InvalidArgument("group orders must be at least 2");
  Report report;
  Battery battery(options, report);
  const bool all = options.suite == "all";
  if (all || options.suite == "fourier") fourier_suite(battery);
  if (all || options.suite == "duality") duality_suite(battery);
  if (all || options.suite == "signed") signed_suite(battery);
  return report;
}

}  // namespace ecm
