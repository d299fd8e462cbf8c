#include <doctest.h>

#include <numbers>

#include "ecm/corpus.hpp"
#include "ecm/duality.hpp"
#include "ecm/error.hpp"
#include "support.hpp"

using namespace ecm;
using test::near;

namespace {

std::vector<Complex> random_table(int q, std::mt19937_64& rng) {
  std::vector<Complex> out(q);
  for (auto& v : out) v = test::random_complex(rng);
  return out;
}

RealMatrix random_symmetric(int q, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  RealMatrix m(q, q);
  for (int a = 0; a < q; ++a)
    for (int b = a; b < q; ++b) m(a, b) = m(b, a) = u(rng);
  return m;
}

Multigraph cyclic_digon() { return corpus::digon().with_orientation({1, 0}); }

}  // namespace

TEST_CASE("general duality") {
  const auto z2 = Group::cyclic(2);
  const auto tri = corpus::triangle();
  const std::vector<QFunction> f(3, constant(z2, 1, 1.0));
  const std::vector<QFunction> h(3, delta_zero(z2, 1));
  const auto pair = general_duality(tri, f, h);
  CHECK(near(pair.lhs, 1 / std::sqrt(2.0), 1e-12));
  CHECK(near(pair.rhs, 1 / std::sqrt(2.0), 1e-12));

  std::mt19937_64 rng(1);
  const auto z3 = Group::cyclic(3);
  const std::vector<QFunction> single{test::random_function(z3, 1, rng)};
  const auto lone = general_duality(Multigraph(1, {}), single, {});
  Complex sum = 0;
  for (int a = 0; a < 3; ++a) sum += single[0][a];
  CHECK(near(lone.lhs, sum / std::sqrt(3.0), 1e-12));
  CHECK(near(lone.rhs, sum / std::sqrt(3.0), 1e-12));

  const auto k4 = corpus::k4();
  std::vector<QFunction> fv, he;
  for (int i = 0; i < 4; ++i) fv.push_back(test::random_function(z3, 1, rng));
  for (int i = 0; i < 6; ++i) he.push_back(test::random_function(z3, 1, rng));
  CHECK(general_duality_check(k4, fv, he, 1e-8));
  CHECK_THROWS_AS(general_duality(k4, fv, std::span<const QFunction>(he).first(5)), InvalidArgument);
}

TEST_CASE("macwilliams") {
  std::mt19937_64 rng(2);
  for (const char* name : {"triangle", "theta", "k4", "digon", "single_loop"}) {
    for (int q : {2, 3, 4}) {
      const auto h = test::random_function(Group::cyclic(q), 1, rng);
      CHECK(macwilliams(corpus::by_name(name), h).relative_residual() < 1e-8);
    }
  }
}

TEST_CASE("flow enumerator models") {
  const auto z2 = Group::cyclic(2);
  const QFunction g(z2, 1, {Complex(0.3, 0.1), Complex(-1.2, 0.5)});
  const Complex expected = g[0] * g[0] + g[1] * g[1];
  const auto loop = corpus::single_loop();
  CHECK(near(cwe_flow_vertex_model(loop, g).value, expected, 1e-12));
  CHECK(near(cwe_flow_edge_model(loop, g).value, expected, 1e-12));

  const auto k4 = corpus::k4();
  const auto point = delta_zero(z2, 1);
  CHECK(near(cwe_flow_vertex_model(k4, point).value, 1.0, 1e-12));
  CHECK(near(cwe_flow_edge_model(k4, point).value, 1.0, 1e-12));

  std::mt19937_64 rng(3);
  const auto z3 = Group::cyclic(3);
  std::uniform_real_distribution<double> u(-1, 1);
  const auto real = QFunction::tabulate(z3, 1, [&](std::span<const int>) { return u(rng); });
  const auto theta = corpus::theta();
  const auto oracle = cwe(enumerate_flows(theta, z3), flow_model_target_weight(real).values());
  CHECK(near(cwe_flow_vertex_model(theta, real).value, oracle, 1e-8));
  CHECK(near(cwe_flow_edge_model(theta, real).value, oracle, 1e-8));
}

TEST_CASE("tension expectation") {
  const auto z2 = Group::cyclic(2);
  const auto edge = corpus::single_edge();
  const auto point = delta_zero(z2, 1);
  const auto target = tension_target_weight(point);
  CHECK(near(target[0], 1.0, 1e-15));
  CHECK(near(target[1], 0.0, 1e-15));
  CHECK(near(cwe_tension_expectation(edge, point).value, 1.0, 1e-12));

  for (const char* name : {"triangle", "theta", "k4"}) {
    const auto g = corpus::by_name(name);
    for (int q : {2, 3}) {
      const auto group = Group::cyclic(q);
      const auto one = constant(group, 1, 1.0);
      const double expected = std::pow(q, double(g.edge_count() + rank(g)));
      CHECK(near(cwe_tension_expectation(g, one).value, expected, 1e-10));
      CHECK(near(cwe(enumerate_tensions(g, group), tension_target_weight(one).values()), expected, 1e-10));
    }
  }
  const auto z3 = Group::cyclic(3);
  std::mt19937_64 rng(4);
  const auto f = test::random_function(z3, 1, rng);
  const auto loop = corpus::single_loop();
  CHECK(near(cwe_tension_expectation(loop, f).value, tension_target_weight(f)[0], 1e-10));
}

TEST_CASE("tutte edge model") {
  CHECK(near(tutte_edge_model(corpus::single_loop(), 2, 3.0).value, 10.0, 1e-10));
  CHECK(near(tutte_edge_model(corpus::triangle(), 2, 2.0).value, 65.0, 1e-10));
  const auto k4 = corpus::k4();
  const auto oracle = hyperbola_value(k4, tutte(k4), 3, Complex(4.0));
  CHECK(near(tutte_edge_model(k4, 3, 2.0).value, oracle, 1e-7));
  CHECK(near(oracle, 4752.0, 1e-12));
  const auto half = hyperbola_value(corpus::theta(), tutte(corpus::theta()), 4, Complex(0.25));
  CHECK(near(tutte_edge_model(corpus::theta(), 4, 0.5).value, half, 1e-9));
  CHECK_THROWS_AS(tutte_edge_model(k4, 2, 1.0), InvalidArgument);
}

TEST_CASE("cubic flow edge model") {
  CHECK(flow_cubic_edge_model(corpus::k4(), 4) == 6);
  CHECK(flow_cubic_edge_model(corpus::theta(), 3) == 2);
  CHECK(near(flow_cubic_edge_value(corpus::theta(), 3).value, 2.0, 1e-12));
  CHECK(flow_cubic_edge_model(corpus::k4(), 2) == 0);
  CHECK(flow_cubic_edge_model(corpus::prism(), 3) == flow_polynomial(corpus::prism(), 3));
  CHECK_THROWS_AS(flow_cubic_edge_model(corpus::cycle4(), 3), InvalidArgument);
}

TEST_CASE("spectral factors") {
  const auto id = szegedy_decompose(RealMatrix::Identity(3, 3));
  CHECK(id.rank == 3);
  CHECK(id.reconstruction_residual < 1e-12);
  for (int a = 0; a < 3; ++a) {
    int nonzero = 0;
    for (int c = 0; c < 3; ++c) nonzero += std::abs(id.h(a, c)) > 1e-12;
    CHECK(nonzero == 1);
  }

  const auto ones = szegedy_decompose(RealMatrix::Ones(4, 4));
  CHECK(ones.rank == 1);
  for (int a = 0; a < 4; ++a) CHECK(near(ones.h(a, 0), 1.0, 1e-12));
  for (int c = 1; c < 4; ++c) CHECK(ones.h.col(c).norm() == 0.0);

  RealMatrix proper = RealMatrix::Ones(3, 3) - RealMatrix::Identity(3, 3);
  const auto pf = szegedy_decompose(proper);
  CHECK(pf.rank == 3);
  CHECK(pf.reconstruction_residual < 1e-9);
  CHECK(std::abs(pf.eigenvalues(0) - 2.0) < 1e-12);
  CHECK(std::abs(pf.eigenvalues(1) + 1.0) < 1e-12);
  CHECK(std::abs(pf.eigenvalues(2) + 1.0) < 1e-12);
  CHECK(pf.h.col(1).real().norm() < 1e-12);
  CHECK(pf.h.col(2).real().norm() < 1e-12);

  RealMatrix skew = RealMatrix::Zero(2, 2);
  skew(0, 1) = 1;
  CHECK_THROWS_AS(szegedy_decompose(skew), InvalidArgument);
}

TEST_CASE("spectral models") {
  const auto z3 = Group::cyclic(3);
  RealMatrix proper = RealMatrix::Ones(3, 3) - RealMatrix::Identity(3, 3);
  const auto one3 = constant(z3, 1, 1.0);
  CHECK(near(szegedy_vertex_model(corpus::triangle(), one3, proper).value, 6.0, 1e-12));
  CHECK(near(szegedy_edge_model(corpus::triangle(), one3, proper).value, 6.0, 1e-9));
  const auto one2 = constant(Group::cyclic(2), 1, 1.0);
  CHECK(near(szegedy_vertex_model(corpus::k4(), one2, RealMatrix::Ones(2, 2)).value, 16.0, 1e-12));
  CHECK(near(szegedy_edge_model(corpus::k4(), one2, RealMatrix::Ones(2, 2)).value, 16.0, 1e-12));

  std::mt19937_64 rng(6);
  for (int q : {2, 3, 4}) {
    const auto f = test::random_function(Group::cyclic(q), 1, rng);
    const auto g = random_symmetric(q, rng);
    const auto theta = corpus::theta();
    CHECK(near(szegedy_vertex_model(theta, f, g).value, szegedy_edge_model(theta, f, g).value, 1e-7));
  }
}

TEST_CASE("X_Q examples") {
  const Complex s0(0.7, 0.2), s1(-1.1, 0.4), t(2.0, -0.5);
  const XQParams p{Group::cyclic(2), {s0, s1}, {t, 1.0}};
  const Complex expected = t * (s0 * s0 + s1 * s1) + 2.0 * s0 * s1;
  CHECK(near(xq_evaluate(corpus::single_edge(), p).value, expected, 1e-12));
  CHECK(near(xq_dual(corpus::single_edge(), p).value, expected, 1e-12));

  const Complex t1(0.5, 1), t2(-2, 0.3), t3(1.5, -0.7);
  const XQParams digon{Group::cyclic(4), {1, 1, 1, 1}, {0.0, t1, t2, t3}};
  const Complex cyclic_value = 4.0 * (t2 * t2 + 2.0 * t1 * t3);
  CHECK(near(xq_evaluate(cyclic_digon(), digon).value, cyclic_value, 1e-12));
  CHECK(near(xq_dual(cyclic_digon(), digon).value, cyclic_value, 1e-12));
  CHECK(near(cwe(enumerate_tensions(cyclic_digon(), Group::cyclic(4)), digon.t), t2 * t2 + 2.0 * t1 * t3, 1e-12));

  for (const char* name : {"triangle", "theta", "k4"}) {
    const auto g = corpus::by_name(name);
    const auto params = principal_params(3, 1.0, 2.5);
    const double qk = std::pow(3.0, double(components(g)));
    CHECK(near(xq_evaluate(g, params).value, qk * hwe(enumerate_tensions(g, Group::cyclic(3)), Complex(2.5)), 1e-10));
  }
}

TEST_CASE("X_Q duality on random tables") {
  std::mt19937_64 rng(7);
  for (const char* name : {"digon", "triangle", "theta"}) {
    const auto g = corpus::by_name(name);
    for (int q : {2, 3, 4}) {
      const XQParams p{Group::cyclic(q), random_table(q, rng), random_table(q, rng)};
      CHECK(near(xq_evaluate(g, p).value, xq_dual(g, p).value, 1e-7));
    }
  }
}

TEST_CASE("X_Q is orientation independent for symmetric t") {
  std::mt19937_64 rng(8);
  std::bernoulli_distribution coin;
  for (const char* name : {"digon", "theta", "k4"}) {
    const auto g = corpus::by_name(name);
    for (int q : {3, 4}) {
      auto t = random_table(q, rng);
      for (int b = 1; b < q; ++b) t[(q - b) % q] = t[b];
      const XQParams p{Group::cyclic(q), random_table(q, rng), t};
      const auto base = xq_evaluate(g, p).value;
      for (int trial = 0; trial < 3; ++trial) {
        std::vector<int> heads(g.edge_count());
        for (auto& h : heads) h = coin(rng) ? 1 : 0;
        CHECK(xq_evaluate(g.with_orientation(heads), p).value == base);
      }
    }
  }
}

TEST_CASE("principal specialization") {
  const auto edge = corpus::single_edge();
  const auto one = principal_specialization(edge, 2, 3.0, 2.0);
  CHECK(one.branch == 1);
  CHECK(near(one.value, 26.0, 1e-12));
  CHECK(near(xq_evaluate(edge, principal_params(2, 3.0, 2.0)).value, 26.0, 1e-12));

  const auto digon = corpus::digon();
  const auto two = principal_specialization(digon, 2, 1.0, 3.0);
  CHECK(two.branch == 2);
  CHECK(two.root == 0);
  CHECK(near(two.value, monochrome_polynomial(digon, 2, 3.0), 1e-12));
  CHECK(near(two.value, 20.0, 1e-12));

  const Complex root = std::polar(1.0, -2 * std::numbers::pi / 3);
  const auto tri = corpus::triangle();
  const auto rooted = principal_specialization(tri, 3, root, 2.0);
  CHECK(rooted.branch == 2);
  CHECK(rooted.root == 1);
  CHECK(near(rooted.value, xq_evaluate(tri, principal_params(3, root, 2.0)).value, 1e-8));

  for (int q : {2, 3, 4}) {
    for (int c = 0; c < q; ++c) {
      const Complex at = std::polar(1.0, -2 * std::numbers::pi * c / q);
      const Complex nearby = at * std::polar(1.0 + 1e-7, 1e-7);
      const auto limit = principal_root_free(corpus::theta(), q, nearby, 1.7);
      CHECK(near(limit, principal_root(corpus::theta(), q, c, 1.7), 1e-3));
    }
  }
}

TEST_CASE("convolution root") {
  const int q = 2;
  const double t = 3;
  const std::vector<Complex> table{t * t - 1 + q, t * t - 1};
  const auto root = convolution_root(Group::cyclic(q), table);
  CHECK(root.residual < 1e-12);
  CHECK(near(root.u[0], 4 / std::sqrt(2.0), 1e-12));
  CHECK(near(root.u[1], 2 / std::sqrt(2.0), 1e-12));

  for (int qq : {3, 4, 5}) {
    std::vector<Complex> tab(qq, t * t - 1);
    tab[0] += qq;
    const auto r = convolution_root(Group::cyclic(qq), tab);
    CHECK(near(std::sqrt(double(qq)) * r.u[0], t - 1 + qq, 1e-12));
    for (int b = 1; b < qq; ++b) CHECK(near(std::sqrt(double(qq)) * r.u[b], t - 1, 1e-12));
  }

  const std::vector<Complex> lopsided{1.0, 2.0, 0.0};
  CHECK_THROWS_AS(convolution_root(Group::cyclic(3), lopsided), InvalidArgument);
  const XQParams bad{Group::cyclic(3), {1, 1, 1}, lopsided};
  CHECK_THROWS_AS(xq_edge_model(corpus::triangle(), bad), InvalidArgument);

  const auto params = principal_params(2, 1.0, 2.0);
  CHECK(near(xq_edge_model(corpus::triangle(), params).value, xq_evaluate(corpus::triangle(), params).value, 1e-7));
}

TEST_CASE("F4 identity") {
  const auto k4 = corpus::k4();
  const auto pair = fg4_identity(k4, 1.0, 1.0);
  CHECK(near(pair.lhs, 6.0, 1e-12));
  CHECK(near(pair.rhs, 6.0, 1e-9));
  CHECK(fg4_identity_check(k4, 2.0, 3.0, 1e-8));
  const auto theta = fg4_identity(corpus::theta(), 1.0, 1.0);
  CHECK(near(theta.lhs, 6.0, 1e-12));
  CHECK(theta.relative_residual() < 1e-9);
}
