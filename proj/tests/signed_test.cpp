#include <doctest.h>

#include <numbers>

#include "ecm/corpus.hpp"
#include "ecm/error.hpp"
#include "ecm/oracles.hpp"
#include "ecm/signed.hpp"
#include "support.hpp"

using namespace ecm;
using test::near;

namespace {

const Complex I(0, 1);

Multigraph swap_first_two(const Multigraph& g, std::size_t v) {
  std::vector<std::vector<HalfEdge>> rot;
  for (std::size_t u = 0; u < g.vertex_count(); ++u) {
    const auto hs = g.half_edges_at(u);
    rot.emplace_back(hs.begin(), hs.end());
  }
  std::swap(rot[v][0], rot[v][1]);
  return g.with_rotation(std::move(rot));
}

// Brute-force transform value at b, straight from the character sum.
Complex transform_at(const QFunction& f, std::span<const int> b) {
  const int q = f.group().order();
  std::vector<int> a(b.size());
  Complex acc = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0.0) continue;
    f.decode(i, a);
    long dot = 0;
    for (std::size_t l = 0; l < b.size(); ++l) dot += static_cast<long>(a[l]) * b[l];
    acc += f[i] * std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(dot % q) / q);
  }
  return acc * std::pow(q, -static_cast<double>(b.size()) / 2);
}

}  // namespace

TEST_CASE("injection signs") {
  CHECK(sgn_injection(std::vector<int>{0, 1, 2}) == 1);
  CHECK(sgn_injection(std::vector<int>{1, 0}) == -1);
  CHECK(sgn_injection(std::vector<int>{0, 0}) == 0);
  CHECK(sgn_injection(std::vector<int>{2, 0, 1}) == 1);
  CHECK(sgn_injection(std::vector<int>{0, 3, 1}) == -1);
  // under the symmetric order of Z_4, 3 stands for -1 and precedes 0
  const auto key = colour_order_key(4, ColourOrder::symmetric);
  CHECK(sgn_injection(std::vector<int>{0, 3}, key) == -1);
  CHECK(sgn_injection(std::vector<int>{3, 0, 1}, key) == 1);
}

TEST_CASE("edge colouring signs") {
  const auto k4 = corpus::k4();
  int first = 0;
  std::size_t seen = 0;
  std::vector<int> y(6, 0);
  for (int code = 0; code < 729; ++code) {
    int c = code;
    for (auto& v : y) {
      v = c % 3;
      c /= 3;
    }
    const int s = sgn_edge_colouring(k4, y);
    if (s == 0) continue;
    if (seen++ == 0) first = s;
    CHECK(s == first);
  }
  CHECK(seen == 6);
  CHECK(first == 1);  // (-1)^{|E|} for a clockwise plane cubic graph

  CHECK(sgn_edge_colouring(k4, std::vector<int>(6, 0)) == 0);
  for (int c = 0; c < 3; ++c) CHECK(sgn_edge_colouring(corpus::single_edge(), std::vector<int>{c}) == 1);
  CHECK_THROWS_AS(sgn_edge_colouring(k4.without_rotation(), std::vector<int>(6, 0)), InvalidArgument);
}

TEST_CASE("colour sets") {
  const auto p = ColourSet::from_halves(5, {1, 2});
  CHECK(p.members == std::vector<int>{1, 2, 3, 4});
  CHECK(p.closed_under_negation());
  CHECK_THROWS_AS(ColourSet::from_halves(5, {1, 4}), InvalidArgument);
  CHECK(ColourSet::whole(3).members == std::vector<int>{0, 1, 2});
  CHECK(ColourSet::centred(5, 3).members == std::vector<int>{0, 1, 4});
  CHECK(ColourSet::centred(4, 2).members == std::vector<int>{1, 3});
  CHECK(ColourSet::one_extra(3).members == std::vector<int>{0, 1, 3});
  CHECK(ColourSet::one_extra(2).members == std::vector<int>{1, 2});
  CHECK(colour_order_key(5, ColourOrder::symmetric) == std::vector<int>{0, 1, 2, -2, -1});
}

TEST_CASE("parity functions") {
  const auto two = parity_function(ColourSet::whole(2), ColourOrder::residue);
  CHECK(two({0, 1}) == 1.0);
  CHECK(two({1, 0}) == -1.0);
  CHECK(two({0, 0}) == 0.0);
  CHECK(two({1, 1}) == 0.0);

  const auto three = parity_function(ColourSet::whole(3), ColourOrder::residue);
  for (auto t : {std::vector<int>{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}) CHECK(three(t) == 1.0);
  for (auto t : {std::vector<int>{0, 2, 1}, {2, 1, 0}, {1, 0, 2}}) CHECK(three(t) == -1.0);

  const auto un = parity_function_union(3, 2);
  int support = 0;
  for (std::size_t i = 0; i < un.size(); ++i) support += un[i] != 0.0;
  CHECK(support == 6);
}

TEST_CASE("fourier determinant") {
  CHECK(near(det_fourier_closed(1), 1.0, 1e-12));
  CHECK(near(det_fourier_closed(2), -2.0, 1e-12));
  CHECK(near(det_fourier_numeric(2), -2.0, 1e-12));
  CHECK(near(det_fourier_closed(3), -3 * std::sqrt(3.0) * I, 1e-12));
  CHECK(near(det_fourier_numeric(3), -3 * std::sqrt(3.0) * I, 1e-9));
  for (int q = 1; q <= 8; ++q) CHECK(std::abs(det_fourier_closed(q) - det_fourier_numeric(q)) < 1e-8);
}

TEST_CASE("transformed parity closed forms") {
  CHECK(near(parity_fourier_closed(3, 4, std::vector<int>{0, 1, 2}), -I / 2.0, 1e-12));
  CHECK(std::abs(parity_fourier_closed(3, 4, std::vector<int>{1, 1, 2})) < 1e-12);
  CHECK(near(parity_fourier_kplus1(3, std::vector<int>{0, 1, 2}), -I / 2.0, 1e-12));
  CHECK(std::abs(parity_fourier_kplus1(3, std::vector<int>{2, 0, 2})) < 1e-12);
  CHECK(near(parity_fourier_kplus1(2, std::vector<int>{0, 1}), -I / std::sqrt(3.0), 1e-12));

  const auto centred42 = parity_function(ColourSet::centred(4, 2), ColourOrder::symmetric);
  const std::vector<int> b02{0, 2};
  CHECK(near(parity_fourier_closed(2, 4, b02), transform_at(centred42, b02), 1e-12));

  for (auto [k, q] : {std::pair{2, 3}, {2, 4}, {3, 4}, {3, 5}, {4, 5}}) {
    CAPTURE(k);
    CAPTURE(q);
    const auto centred = parity_function(ColourSet::centred(q, k), ColourOrder::symmetric);
    const auto ft = fourier(centred);
    std::vector<int> b(k);
    for (std::size_t i = 0; i < ft.size(); ++i) {
      ft.decode(i, b);
      REQUIRE(std::abs(parity_fourier_closed(k, q, b) - transform_at(centred, b)) < 1e-9);
      REQUIRE(std::abs(ft[i] - transform_at(centred, b)) < 1e-9);
    }
    if (q == k + 1) {
      const auto extra = fourier(parity_function(ColourSet::one_extra(k), ColourOrder::residue));
      for (std::size_t i = 0; i < extra.size(); ++i) {
        extra.decode(i, b);
        REQUIRE(std::abs(parity_fourier_kplus1(k, b) - extra[i]) < 1e-9);
      }
    }
  }
}

TEST_CASE("signed chain examples") {
  const auto k4 = corpus::k4();
  const auto whole3 = ColourSet::whole(3);
  const auto zs = zero_sum_parity_sum(k4, whole3, ColourOrder::residue);
  CHECK(near(zs.value, 6.0, 1e-9));
  CHECK(near(transformed_monochrome_parity_sum(k4, whole3, ColourOrder::residue).value, zs.value, 1e-9));
  CHECK(near(monochrome_parity_sum(k4, whole3, ColourOrder::residue).value, 6.0, 1e-9));
  CHECK(factorization_sign_sum(k4, whole3).signed_sum == 6);
  CHECK(factorization_sign_sum(k4, ColourSet::from_halves(3, {0, 1})).signed_sum == 6);

  const auto tri = corpus::triangle();
  const auto odd = factorization_sign_sum(tri, ColourSet::from_halves(3, {1}));
  CHECK(odd.signed_sum == 0);
  CHECK(odd.count == 0);
  CHECK(near(zero_sum_parity_sum(tri, ColourSet::from_halves(3, {1}), ColourOrder::symmetric).value, 0.0, 1e-9));

  const auto c4 = corpus::cycle4();
  const auto pm = ColourSet::from_halves(3, {1});
  const auto fc = factorization_sign_sum(c4, pm);
  CHECK(std::abs(fc.signed_sum) == 2);
  CHECK(fc.count == 2);
  CHECK(near(zero_sum_parity_sum(c4, pm, ColourOrder::symmetric).value, double(fc.signed_sum), 1e-9));
  CHECK(near(zero_sum_parity_sum(c4, ColourSet::whole(2), ColourOrder::residue).value, -2.0, 1e-9));
}

TEST_CASE("proper colouring sign sums") {
  const auto k4 = proper_colouring_sign_sum(corpus::k4(), 3);
  CHECK(k4.signed_sum == 6);
  CHECK(k4.count == 6);
  const auto theta = proper_colouring_sign_sum(corpus::theta(), 3);
  CHECK(std::abs(theta.signed_sum) == 6);
  CHECK(theta.count == 6);
  const auto k33 = proper_colouring_sign_sum(corpus::k33(), 3);
  CHECK(k33.count == 12);
  CHECK(k33.signed_sum == 0);
  CHECK(proper_colouring_sign_sum(corpus::triangle(), 2).count == 0);
  // plane cubic, clockwise rotation: every proper 3-colouring has sign (-1)^{|E|}
  const auto prism = proper_colouring_sign_sum(corpus::prism(), 3);
  CHECK(prism.signed_sum == -static_cast<long long>(prism.count));
  for (const char* name : {"k4", "theta", "prism", "c4", "octahedron"}) {
    const auto g = corpus::by_name(name);
    const int k = static_cast<int>(g.regular_degree());
    if (g.edge_count() > 10) continue;
    CHECK(proper_colouring_sign_sum(g, k).count == count_proper_colourings(line_graph(g), k));
  }
}

TEST_CASE("transfer sign") {
  CHECK(parity_transfer_sign(3, 6, 4) == 1);
  CHECK(parity_transfer_sign(3, 9, 6) == -1);
  CHECK(parity_transfer_sign(2, 4, 4) == 1);
  for (const char* name : {"k4", "theta", "prism", "c4", "digon"}) {
    const auto g = corpus::by_name(name);
    const int k = static_cast<int>(g.regular_degree());
    const auto zs = zero_sum_parity_sum(g, ColourSet::whole(k), ColourOrder::residue);
    const auto mono = monochrome_parity_sum(g, ColourSet::whole(k), ColourOrder::residue);
    CAPTURE(name);
    CHECK(near(zs.value, double(parity_transfer_sign(k, long(g.edge_count()), long(g.vertex_count()))) * mono.value,
               1e-9));
  }
}

TEST_CASE("sine model") {
  for (int q : {3, 4, 5}) CHECK(near(sine_model(corpus::k4(), q, 3).value, 6.0, 1e-9));
  CHECK(std::abs(std::abs(sine_model(corpus::theta(), 3, 3).value) - 6.0) < 1e-9);
  CHECK(near(sine_model(corpus::theta(), 3, 3).value, -6.0, 1e-9));
  CHECK(near(sine_model(corpus::k33(), 3, 3).value, 0.0, 1e-9));
  CHECK_THROWS_AS(sine_model(corpus::k4().without_rotation(), 3, 3), InvalidArgument);
}

TEST_CASE("k+1 colour sums") {
  const auto k4 = kplus1_sign_sum(corpus::k4(), 3);
  CHECK(near(k4.value, 6.0, 1e-9));
  CHECK(std::abs(signed_colouring_sum(corpus::k4(), 4)) == 96);
  CHECK(near(kplus1_sign_sum(corpus::triangle(), 2).value, 0.0, 1e-9));
  CHECK(std::abs(std::abs(kplus1_sign_sum(corpus::cycle4(), 2).value) - 2.0) < 1e-9);
  CHECK(std::abs(std::abs(kplus1_sign_sum(corpus::theta(), 3).value) - 6.0) < 1e-9);
  const auto prism = kplus1_sign_sum(corpus::prism(), 3);
  CHECK(std::abs(std::abs(prism.value) - double(chromatic(line_graph(corpus::prism()), 3))) < 1e-9);
}

TEST_CASE("even minus odd proper 4-colourings") {
  const auto k4 = even_minus_odd_proper4(corpus::k4());
  CHECK(k4.difference == 96);
  CHECK(k4.even == 96);
  CHECK(k4.odd == 0);
  // (-4)^{|E|/3} F(G;4)
  const auto prism = even_minus_odd_proper4(corpus::prism());
  CHECK(prism.difference == -64 * static_cast<long long>(flow_polynomial(corpus::prism(), 4)));
  const auto theta = even_minus_odd_proper4(corpus::theta());
  CHECK(theta.difference == -4 * static_cast<long long>(flow_polynomial(corpus::theta(), 4)));
  CHECK(theta.even + theta.odd == count_proper_colourings(line_graph(corpus::theta()), 4));
}

TEST_CASE("rotation covariance") {
  for (const char* name : {"k4", "theta", "prism"}) {
    const auto g = corpus::by_name(name);
    const auto h = swap_first_two(g, 0);
    CAPTURE(name);
    CHECK(near(sine_model(h, 3, 3).value, -sine_model(g, 3, 3).value, 1e-9));
    CHECK(near(kplus1_sign_sum(h, 3).value, -kplus1_sign_sum(g, 3).value, 1e-9));
    CHECK(proper_colouring_sign_sum(h, 3).signed_sum == -proper_colouring_sign_sum(g, 3).signed_sum);
  }
  const auto c4 = corpus::cycle4();
  const auto swapped = swap_first_two(c4, 2);
  CHECK(proper_colouring_sign_sum(swapped, 2).signed_sum == -proper_colouring_sign_sum(c4, 2).signed_sum);
}

TEST_CASE("single edge reduces to trivial products") {
  const auto edge = corpus::single_edge();
  for (int q : {2, 3, 4}) {
    CHECK(signed_colouring_sum(edge, q) == q);
    // q^{-|E|} times q colourings, each with an empty sine product
    CHECK(near(sine_model(edge, q, 1).value, 1.0, 1e-12));
  }
  const auto proper = proper_colouring_sign_sum(edge, 1);
  CHECK(proper.signed_sum == 1);
  CHECK(proper.count == 1);
  // (k+1)^{-|V|/2} (k+1)^{|E|} with k = 1
  CHECK(near(kplus1_sign_sum(edge, 1).value, 1.0, 1e-12));
  CHECK(factorization_sign_sum(edge, ColourSet::whole(1)).signed_sum == 1);
}
