// Acceptance suite: one PASS/FAIL line per criterion, tolerances pinned here.

#include <Eigen/SVD>

#include <chrono>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>

#include "ecm/corpus.hpp"
#include "ecm/duality.hpp"
#include "ecm/error.hpp"
#include "ecm/models.hpp"
#include "ecm/oracles.hpp"
#include "ecm/signed.hpp"

using namespace ecm;

namespace {

double relative(Complex a, Complex b) { return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)}); }

double power_of(int q, std::size_t n) { return std::pow(double(q), double(n)); }

QFunction random_function(const Group& g, int arity, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  return QFunction::tabulate(g, arity, [&](std::span<const int>) {
    const double re = u(rng);
    return Complex(re, u(rng));
  });
}

std::vector<Complex> random_table(int q, std::mt19937_64& rng) {
  return random_function(Group::cyclic(q), 1, rng).values();
}

// Tracks the worst residual against a pinned tolerance and any hard failure.
struct Tally {
  double worst = 0.0;
  std::size_t cases = 0;
  bool ok = true;
  std::string detail;

  void residual(double r, double tol, const std::string& what) {
    ++cases;
    worst = std::max(worst, r);
    if (!(r < tol)) fail(what + " residual " + std::to_string(r));
  }
  void expect(bool condition, const std::string& what) {
    ++cases;
    if (!condition) fail(what);
  }
  void fail(const std::string& what) {
    if (ok) detail = what;
    ok = false;
  }
};

int failures = 0;

void criterion(int number, const std::string& title, double time_limit, const std::function<void(Tally&)>& body) {
  Tally t;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(t);
  } catch (const std::exception& e) {
    t.fail(std::string("error: ") + e.what());
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (seconds >= time_limit) t.fail("runtime " + std::to_string(seconds) + " s over " + std::to_string(time_limit) + " s");
  if (!t.ok) ++failures;
  std::printf("criterion %2d %s  %s  cases=%zu worst=%.3g time=%.2fs%s%s\n", number, t.ok ? "PASS" : "FAIL",
              title.c_str(), t.cases, t.worst, seconds, t.ok ? "" : "  :: ", t.detail.c_str());
  std::fflush(stdout);
}

const std::vector<corpus::Entry> graphs = corpus::all();

}  // namespace

int main() {
  criterion(1, "Tutte edge model on the hyperbola", 60, [](Tally& t) {
    for (const auto& entry : graphs) {
      const auto& g = entry.graph;
      const auto poly = tutte(g);
      for (int q : {2, 3, 4}) {
        if (power_of(q, g.edge_count()) > 1e6) continue;
        for (int s : {2, 3}) {
          const auto model = tutte_edge_model(g, q, double(s)).value;
          const auto oracle = hyperbola_value(g, poly, q, Complex(s * s));
          t.residual(relative(model, oracle), 1e-7, entry.name + " q=" + std::to_string(q));
        }
      }
    }
  });

  criterion(2, "flow cwe: oracle, vertex route, edge route; tension expectation", 120, [](Tally& t) {
    std::mt19937_64 rng(2);
    for (const auto& entry : graphs) {
      const auto& g = entry.graph;
      for (int q : {2, 3}) {
        if (power_of(q, std::max(g.vertex_count(), g.edge_count())) > 1e6) continue;
        const auto group = Group::cyclic(q);
        const auto flows = enumerate_flows(g, group);
        const auto tensions = enumerate_tensions(g, group);
        for (int draw = 0; draw < 5; ++draw) {
          const auto w = random_function(group, 1, rng);
          const auto oracle = cwe(flows, flow_model_target_weight(w).values());
          const std::string tag = entry.name + " q=" + std::to_string(q);
          t.residual(relative(cwe_flow_vertex_model(g, w).value, oracle), 1e-7, tag + " vertex");
          t.residual(relative(cwe_flow_edge_model(g, w).value, oracle), 1e-7, tag + " edge");
          const auto f = random_function(group, 1, rng);
          const auto tension = cwe(tensions, tension_target_weight(f).values());
          t.residual(relative(cwe_tension_expectation(g, f).value, tension), 1e-7, tag + " tension");
        }
      }
    }
  });

  criterion(3, "generalized duality and MacWilliams", 120, [](Tally& t) {
    std::mt19937_64 rng(3);
    for (const auto& entry : graphs) {
      const auto& g = entry.graph;
      for (int q : {2, 3, 4}) {
        if (power_of(q, std::max(g.vertex_count(), g.edge_count())) > 1e6) continue;
        const auto group = Group::cyclic(q);
        for (int draw = 0; draw < 5; ++draw) {
          std::vector<QFunction> f, h;
          for (std::size_t v = 0; v < g.vertex_count(); ++v) f.push_back(random_function(group, 1, rng));
          for (std::size_t e = 0; e < g.edge_count(); ++e) h.push_back(random_function(group, 1, rng));
          const std::string tag = entry.name + " q=" + std::to_string(q);
          t.residual(general_duality(g, f, h).relative_residual(), 1e-8, tag + " duality");
          t.residual(macwilliams(g, random_function(group, 1, rng)).relative_residual(), 1e-8, tag + " MacWilliams");
        }
      }
    }
  });

  criterion(4, "cubic flow edge model equals the flow polynomial", 600, [](Tally& t) {
    for (const char* name : {"theta", "k4", "prism", "k33", "petersen"}) {
      const auto g = corpus::by_name(name);
      for (int q = 2; q <= 5; ++q) {
        if (std::string(name) == "petersen" && q > 3) continue;
        const auto value = flow_cubic_edge_value(g, q);
        const auto exact = flow_polynomial(g, q);
        const std::string tag = std::string(name) + " q=" + std::to_string(q);
        t.residual(value.integer_residual(), 1e-6, tag + " rounding");
        t.expect(BigInt(value.nearest_integer()) == exact, tag + " value");
      }
    }
  });

  criterion(5, "F4 identity", 60, [](Tally& t) {
    for (const char* name : {"theta", "k4", "prism"}) {
      for (auto [s, u] : {std::pair{1.0, 1.0}, {2.0, 3.0}}) {
        const auto pair = fg4_identity(corpus::by_name(name), s, u);
        t.residual(pair.relative_residual(), 1e-8, name);
      }
    }
  });

  criterion(6, "spectral edge weight factorization", 60, [](Tally& t) {
    std::mt19937_64 rng(6);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int q : {2, 3, 4}) {
      for (int draw = 0; draw < 10; ++draw) {
        RealMatrix g(q, q);
        if (draw % 2 == 0) {
          for (int a = 0; a < q; ++a)
            for (int b = a; b < q; ++b) g(a, b) = g(b, a) = u(rng);
        } else {
          // rank one less than q
          RealMatrix basis(q, q - 1);
          for (int a = 0; a < q; ++a)
            for (int c = 0; c < q - 1; ++c) basis(a, c) = u(rng);
          Eigen::VectorXd weights(q - 1);
          for (int c = 0; c < q - 1; ++c) weights(c) = u(rng);
          g = basis * weights.asDiagonal() * basis.transpose();
        }
        const auto factor = szegedy_decompose(g);
        Eigen::JacobiSVD<RealMatrix> svd(g);
        svd.setThreshold(1e-9);
        const std::string tag = "q=" + std::to_string(q) + " draw " + std::to_string(draw);
        t.residual(factor.reconstruction_residual, 1e-9, tag + " reconstruction");
        int zero_columns = 0;
        for (int c = 0; c < q; ++c) zero_columns += factor.h.col(c).norm() == 0.0;
        t.expect(q - zero_columns == static_cast<int>(svd.rank()), tag + " rank");
        const auto f = random_function(Group::cyclic(q), 1, rng);
        for (const char* name : {"triangle", "theta", "k4"}) {
          const auto graph = corpus::by_name(name);
          t.residual(relative(szegedy_vertex_model(graph, f, g).value, szegedy_edge_model(graph, f, g).value), 1e-7,
                     tag + " " + name);
        }
      }
    }
  });

  criterion(7, "X_Q duality, principal specialization and convolution root", 60, [](Tally& t) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.5, 3.0);
    for (const char* name : {"digon", "triangle", "theta"}) {
      const auto g = corpus::by_name(name);
      for (int q : {2, 3, 4}) {
        const std::string tag = std::string(name) + " q=" + std::to_string(q);
        const XQParams p{Group::cyclic(q), random_table(q, rng), random_table(q, rng)};
        t.residual(relative(xq_evaluate(g, p).value, xq_dual(g, p).value), 1e-7, tag + " dual");

        const Complex tv = u(rng);
        const Complex generic(u(rng), 0.3);
        t.residual(relative(principal_specialization(g, q, generic, tv).value,
                            xq_evaluate(g, principal_params(q, generic, tv)).value),
                   1e-7, tag + " principal");
        for (int c = 0; c < q; ++c) {
          const Complex root = std::polar(1.0, -2 * std::numbers::pi * c / q);
          const auto branch = principal_specialization(g, q, root, tv);
          t.expect(branch.branch == 2 && branch.root == c, tag + " branch");
          t.residual(relative(branch.value, xq_evaluate(g, principal_params(q, root, tv)).value), 1e-7,
                     tag + " root " + std::to_string(c));
        }

        auto symmetric = random_table(q, rng);
        for (int b = 1; b < q; ++b) symmetric[(q - b) % q] = symmetric[b];
        const XQParams sp{Group::cyclic(q), random_table(q, rng), symmetric};
        t.residual(relative(xq_edge_model(g, sp).value, xq_evaluate(g, sp).value), 1e-7, tag + " edge model");
      }
    }
    for (int q : {2, 3, 4}) {
      for (double tv : {2.0, 3.0}) {
        std::vector<Complex> table(q, tv * tv - 1);
        table[0] += q;
        const auto root = convolution_root(Group::cyclic(q), table);
        const double rq = std::sqrt(double(q));
        t.residual(std::abs(rq * root.u[0] - (tv - 1 + q)), 1e-12, "u_0");
        for (int b = 1; b < q; ++b) t.residual(std::abs(rq * root.u[b] - (tv - 1)), 1e-12, "u_b");
      }
    }
    const auto two = convolution_root(Group::cyclic(2), std::vector<Complex>{10.0, 8.0});
    t.residual(std::abs(two.u[0] - 4 / std::sqrt(2.0)), 1e-12, "u_0 at t=3, q=2");
  });

  criterion(8, "Fourier determinant closed form", 10, [](Tally& t) {
    for (int q = 1; q <= 8; ++q)
      t.residual(std::abs(det_fourier_closed(q) - det_fourier_numeric(q)), 1e-8, "q=" + std::to_string(q));
  });

  criterion(9, "transformed parity closed forms", 60, [](Tally& t) {
    for (auto [k, q] : {std::pair{2, 3}, {2, 4}, {3, 4}, {3, 5}, {4, 5}}) {
      const std::string tag = "k=" + std::to_string(k) + " q=" + std::to_string(q);
      const auto centred = fourier(parity_function(ColourSet::centred(q, k), ColourOrder::symmetric));
      std::vector<int> b(k);
      for (std::size_t i = 0; i < centred.size(); ++i) {
        centred.decode(i, b);
        t.residual(std::abs(parity_fourier_closed(k, q, b) - centred[i]), 1e-9, tag + " centred");
      }
      if (q != k + 1) continue;
      const auto extra = fourier(parity_function(ColourSet::one_extra(k), ColourOrder::residue));
      for (std::size_t i = 0; i < extra.size(); ++i) {
        extra.decode(i, b);
        t.residual(std::abs(parity_fourier_kplus1(k, b) - extra[i]), 1e-9, tag + " one extra");
      }
    }
  });

  criterion(10, "signed chain and transfer sign", 60, [](Tally& t) {
    for (auto [name, k] : {std::pair{"triangle", 2}, {"c4", 2}, {"theta", 3}, {"k4", 3}}) {
      const auto g = corpus::by_name(name);
      const auto colours = ColourSet::whole(k);
      const auto zs = zero_sum_parity_sum(g, colours, ColourOrder::residue).value;
      const auto mono = monochrome_parity_sum(g, colours, ColourOrder::residue).value;
      const auto fact = factorization_sign_sum(g, colours);
      const auto proper = proper_colouring_sign_sum(g, k);
      const std::string tag = std::string(name) + " k=" + std::to_string(k);
      t.residual(std::abs(std::abs(zs) - std::abs(double(fact.signed_sum))), 1e-9, tag + " |zero-sum| vs |factorizations|");
      t.residual(std::abs(std::abs(zs) - std::abs(double(proper.signed_sum))), 1e-9, tag + " |zero-sum| vs |proper|");
      const double sign = parity_transfer_sign(k, long(g.edge_count()), long(g.vertex_count()));
      t.residual(std::abs(zs - sign * mono), 1e-9, tag + " transfer sign");
    }
  });

  criterion(11, "sine model", 600, [](Tally& t) {
    for (int q : {3, 4, 5})
      t.residual(std::abs(std::abs(sine_model(corpus::k4(), q, 3).value) - 6.0), 1e-5, "k4 q=" + std::to_string(q));
    t.residual(std::abs(std::abs(sine_model(corpus::theta(), 3, 3).value) - 6.0), 1e-5, "theta");
    t.residual(std::abs(sine_model(corpus::petersen(), 3, 3).value), 1e-4, "petersen");
  });

  criterion(12, "k+1 colour sums and even minus odd 4-colourings", 60, [](Tally& t) {
    for (auto [name, k] : {std::pair{"c4", 2}, {"theta", 3}, {"k4", 3}, {"prism", 3}}) {
      const auto g = corpus::by_name(name);
      const double expected = static_cast<double>(chromatic(line_graph(g), k));
      t.residual(std::abs(std::abs(kplus1_sign_sum(g, k).value) - expected), 1e-9, name);
    }
    t.residual(std::abs(std::abs(kplus1_sign_sum(corpus::cycle4(), 2).value) - 2.0), 1e-9, "c4 value");
    t.residual(std::abs(std::abs(kplus1_sign_sum(corpus::theta(), 3).value) - 6.0), 1e-9, "theta value");
    t.residual(std::abs(std::abs(kplus1_sign_sum(corpus::k4(), 3).value) - 6.0), 1e-9, "k4 value");
    const auto k4 = even_minus_odd_proper4(corpus::k4());
    t.expect(k4.difference == 96, "k4 even minus odd " + std::to_string(k4.difference) + " != 96");
    const auto prism = even_minus_odd_proper4(corpus::prism());
    const BigInt target = 16 * flow_polynomial(corpus::prism(), 4);
    t.expect(BigInt(prism.difference) == target,
             "prism even minus odd " + std::to_string(prism.difference) + " != 16 F(prism;4) = " + to_string(target));
  });

  criterion(13, "Fourier properties and orthogonal invariance", 120, [](Tally& t) {
    std::mt19937_64 rng(13);
    for (int q = 1; q <= 8; ++q) {
      const auto group = Group::cyclic(q);
      for (int d = 1; d <= 3; ++d) {
        const auto f = random_function(group, d, rng);
        const auto h = random_function(group, d, rng);
        const auto ff = fourier(f);
        const auto fh = fourier(h);
        const std::string tag = "q=" + std::to_string(q) + " d=" + std::to_string(d);
        t.residual(relative(hermitian_inner(ff, fh), hermitian_inner(f, h)), 1e-9, tag + " unitary");
        t.residual(max_abs_diff(fourier(ff), negate(f)) / std::max(1.0, max_abs(f)), 1e-9, tag + " F^2 = N");
        t.residual(max_abs_diff(fourier(negate(f)), negate(ff)) / std::max(1.0, max_abs(f)), 1e-9, tag + " FN = NF");
        const auto lhs = fourier(pointwise(f, h));
        const auto rhs = scaled(convolve(ff, fh), std::pow(q, -d / 2.0));
        t.residual(max_abs_diff(lhs, rhs) / std::max(1.0, max_abs(lhs)), 1e-9, tag + " convolution");
      }
    }
    for (int q : {2, 3}) {
      const auto group = Group::cyclic(q);
      for (const auto& entry : graphs) {
        const auto& g = entry.graph;
        if (power_of(q, g.edge_count()) > 1e6) continue;
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
          ArityFamily f(group);
          for (int d : ArityFamily::degrees_of(g)) f.set(random_function(group, d, rng));
          const auto check = orthogonal_invariance_check(g, f, random_orthogonal(q, seed), 1e-8);
          t.residual(relative(check.lhs, check.rhs), 1e-8, entry.name + " q=" + std::to_string(q));
          t.residual(check.monochrome_fixed_residual, 1e-12, "U fixes monochrome");
        }
      }
    }
  });

  if (failures) std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
