#include <doctest.h>

#include <vector>

#include "ecm/corpus.hpp"
#include "ecm/error.hpp"
#include "ecm/models.hpp"
#include "ecm/oracles.hpp"
#include "ecm/signed.hpp"
#include "support.hpp"

using namespace ecm;
using test::near;

namespace {

QFunction ones(const Group& g, int arity) { return constant(g, arity, 1.0); }

QFunction proper_pair(const Group& g) {
  return QFunction::tabulate(g, 2, [](std::span<const int> a) { return a[0] != a[1] ? 1.0 : 0.0; });
}

ArityFamily matching_weights(const Multigraph& g) {
  return ArityFamily::tabulate(Group::cyclic(2), ArityFamily::degrees_of(g), [](std::span<const int> a) {
    int ones = 0;
    for (int x : a) ones += x;
    return ones == 1 ? 1.0 : 0.0;
  });
}

}  // namespace

TEST_CASE("vertex model examples") {
  const auto z3 = Group::cyclic(3);
  CHECK(near(vertex_partition(corpus::triangle(), {ones(z3, 1), proper_pair(z3)}).value, 6.0, 1e-12));
  CHECK(near(vertex_partition(Multigraph(1, {}), {ones(z3, 1), proper_pair(z3)}).value, 3.0, 1e-12));
  const auto z2 = Group::cyclic(2);
  CHECK(near(vertex_partition(corpus::single_edge(), {ones(z2, 1), proper_pair(z2)}).value, 2.0, 1e-12));
  // the loop sees (x, x), so a proper-colouring weight kills it
  CHECK(near(vertex_partition(corpus::single_loop(), {ones(z3, 1), proper_pair(z3)}).value, 0.0, 1e-12));
}

TEST_CASE("vertex model matches the proper colouring count") {
  for (const auto& entry : corpus::all()) {
    if (entry.graph.vertex_count() > 8) continue;
    for (int q : {2, 3, 4}) {
      const auto group = Group::cyclic(q);
      const auto z = vertex_partition(entry.graph, {ones(group, 1), proper_pair(group)});
      CHECK(near(z.value, double(count_proper_colourings(entry.graph, q)), 1e-12));
    }
  }
}

TEST_CASE("edge model counts perfect matchings") {
  const auto z2 = Group::cyclic(2);
  const auto k4 = corpus::k4();
  CHECK(near(edge_partition(k4, {matching_weights(k4), ones(z2, 1)}).value, 3.0, 1e-12));
  const auto tri = corpus::triangle();
  CHECK(near(edge_partition(tri, {matching_weights(tri), ones(z2, 1)}).value, 0.0, 1e-12));
  const auto edge = corpus::single_edge();
  CHECK(near(edge_partition(edge, {matching_weights(edge), ones(z2, 1)}).value, 1.0, 1e-12));
  const auto prism = corpus::prism();
  CHECK(near(edge_partition(prism, {matching_weights(prism), ones(z2, 1)}).value, 4.0, 1e-12));
  const auto petersen = corpus::petersen();
  CHECK(near(edge_partition(petersen, {matching_weights(petersen), ones(z2, 1)}).value, 6.0, 1e-12));
}

TEST_CASE("edge model on a loop sees its colour twice") {
  const auto z3 = Group::cyclic(3);
  ArityFamily f(z3);
  f.set(QFunction::tabulate(z3, 2, [](std::span<const int> a) { return a[0] == a[1] ? 1.0 : 0.0; }));
  CHECK(near(edge_partition(corpus::single_loop(), {f, ones(z3, 1)}).value, 3.0, 1e-12));
  ArityFamily mixed(z3);
  mixed.set(QFunction::tabulate(z3, 2, [](std::span<const int> a) { return a[0] != a[1] ? 1.0 : 0.0; }));
  CHECK(near(edge_partition(corpus::single_loop(), {mixed, ones(z3, 1)}).value, 0.0, 1e-12));
}

TEST_CASE("uniform edge model equals the monochrome half-edge pairing") {
  std::mt19937_64 rng(8);
  for (const auto& entry : corpus::all()) {
    for (int q : {2, 3}) {
      const auto group = Group::cyclic(q);
      double size = 1;
      for (std::size_t e = 0; e < entry.graph.edge_count(); ++e) size *= q;
      if (size > 1e6) continue;
      ArityFamily f(group);
      for (int d : ArityFamily::degrees_of(entry.graph)) f.set(test::random_function(group, d, rng));
      const auto lhs = edge_partition(entry.graph, {f, ones(group, 1)});
      const auto rhs = halfedge_inner(entry.graph, f, monochrome_indicator(group, 2));
      CAPTURE(entry.name);
      CHECK(near(lhs.value, rhs.value, 1e-9));
    }
  }
  const auto z4 = Group::cyclic(4);
  ArityFamily ones1(z4);
  ones1.set(ones(z4, 1));
  CHECK(near(halfedge_inner(corpus::single_edge(), ones1, monochrome_indicator(z4, 2)).value, 4.0, 1e-12));
}

TEST_CASE("zero-sum pairing of the parity weight agrees with the signed route") {
  const auto k4 = corpus::k4();
  const auto k_set = ColourSet::whole(3);
  const auto f = ArityFamily::tabulate(Group::cyclic(3), std::vector<int>{3}, [&](std::span<const int> a) {
    return parity_function(k_set, ColourOrder::residue)(a);
  });
  const auto direct = halfedge_inner(k4, f, zero_sum_indicator(Group::cyclic(3), 2));
  CHECK(near(direct.value, zero_sum_parity_sum(k4, k_set, ColourOrder::residue).value, 1e-9));
}

TEST_CASE("models multiply over disjoint unions") {
  std::mt19937_64 rng(21);
  const auto a = corpus::triangle();
  const auto b = corpus::theta();
  const auto u = disjoint_union(a, b);
  for (int q : {2, 3}) {
    const auto group = Group::cyclic(q);
    const VertexModel vm{test::random_function(group, 1, rng), test::random_function(group, 2, rng)};
    CHECK(near(vertex_partition(u, vm).value, vertex_partition(a, vm).value * vertex_partition(b, vm).value, 1e-9));
    ArityFamily f(group);
    f.set(test::random_function(group, 2, rng));
    f.set(test::random_function(group, 3, rng));
    const EdgeModel em{f, test::random_function(group, 1, rng)};
    CHECK(near(edge_partition(u, em).value, edge_partition(a, em).value * edge_partition(b, em).value, 1e-9));
  }
}

TEST_CASE("term cap") {
  const auto z4 = Group::cyclic(4);
  const VertexModel vm{ones(z4, 1), ones(z4, 2)};
  CHECK_THROWS_AS(vertex_partition(corpus::petersen(), vm, {1000}), CapExceeded);
  CHECK(vertex_partition(corpus::petersen(), {ones(Group::cyclic(2), 1), ones(Group::cyclic(2), 2)}).terms == 1024);
}

TEST_CASE("orthogonal invariance") {
  std::mt19937_64 rng(4);
  const auto z3 = Group::cyclic(3);
  const auto k4 = corpus::k4();
  ArityFamily f(z3);
  f.set(test::random_function(z3, 3, rng));
  CHECK(orthogonal_invariance_check(k4, f, RealMatrix::Identity(3, 3), 1e-9).passed);
  RealMatrix signed_perm = RealMatrix::Zero(3, 3);
  signed_perm(0, 1) = -1;
  signed_perm(1, 2) = 1;
  signed_perm(2, 0) = -1;
  const auto sp = orthogonal_invariance_check(k4, f, signed_perm, 1e-9);
  CHECK(sp.passed);
  CHECK(sp.monochrome_fixed_residual < 1e-12);

  const auto z2 = Group::cyclic(2);
  ArityFamily f2(z2);
  f2.set(test::random_function(z2, 2, rng));
  for (std::uint64_t seed = 0; seed < 5; ++seed)
    CHECK(orthogonal_invariance_check(corpus::triangle(), f2, random_orthogonal(2, seed), 1e-8).passed);
}
