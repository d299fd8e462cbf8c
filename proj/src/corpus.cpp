#include "ecm/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ecm/error.hpp"
#include "ecm/graph_io.hpp"

namespace ecm::corpus {

namespace {

struct Point {
  double x, y;
};

Point on_circle(double radius, double degrees) {
  const double a = degrees * std::numbers::pi / 180.0;
  return {radius * std::cos(a), radius * std::sin(a)};
}

/// Clockwise rotation of a straight-line drawing: half-edges at v sorted by
/// decreasing direction angle toward the far endpoint.
Multigraph drawn(std::size_t n, std::vector<Edge> edges, const std::vector<Point>& at) {
  Multigraph g(n, std::move(edges));
  std::vector<std::vector<HalfEdge>> order(n);
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<std::pair<double, HalfEdge>> keyed;
    for (auto h : g.half_edges_at(v)) {
      const std::size_t w = g.endpoint({h.edge, 1 - h.end});
      keyed.push_back({std::atan2(at[w].y - at[v].y, at[w].x - at[v].x), h});
    }
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    for (const auto& [angle, h] : keyed) order[v].push_back(h);
  }
  return g.with_rotation(std::move(order)).with_pfaffian_assertion(true);
}

Multigraph edge_order_rotation(Multigraph g) {
  std::vector<std::vector<HalfEdge>> order(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const auto hs = g.half_edges_at(v);
    order[v].assign(hs.begin(), hs.end());
  }
  return g.with_rotation(std::move(order));
}

}  // namespace

Multigraph single_edge() { return edge_order_rotation(Multigraph(2, {{0, 1}})).with_pfaffian_assertion(true); }

Multigraph single_loop() { return edge_order_rotation(Multigraph(1, {{0, 0}})); }

Multigraph digon() {
  // Two arcs between v0 (left) and v1 (right): e0 above, e1 below.
  return Multigraph(2, {{0, 1}, {0, 1}})
      .with_rotation({{{0, 0}, {1, 0}}, {{1, 1}, {0, 1}}})
      .with_pfaffian_assertion(true);
}

Multigraph triangle() {
  return drawn(3, {{0, 1}, {1, 2}, {2, 0}}, {on_circle(1, 90), on_circle(1, 210), on_circle(1, 330)});
}

Multigraph cycle4() {
  return drawn(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}},
               {on_circle(1, 90), on_circle(1, 180), on_circle(1, 270), on_circle(1, 0)});
}

Multigraph theta() {
  // Three arcs from v0 (left) to v1 (right): e0 top, e1 middle, e2 bottom.
  return Multigraph(2, {{0, 1}, {0, 1}, {0, 1}})
      .with_rotation({{{0, 0}, {1, 0}, {2, 0}}, {{2, 1}, {1, 1}, {0, 1}}})
      .with_pfaffian_assertion(true);
}

Multigraph k4() {
  return drawn(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}},
               {{0, 0}, on_circle(1, 90), on_circle(1, 210), on_circle(1, 330)});
}

Multigraph prism() {
  return drawn(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}},
               {on_circle(2, 90), on_circle(2, 210), on_circle(2, 330), on_circle(1, 90), on_circle(1, 210),
                on_circle(1, 330)});
}

Multigraph k33() {
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 3; b < 6; ++b) edges.push_back({a, b});
  return edge_order_rotation(Multigraph(6, std::move(edges)));
}

Multigraph petersen() {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < 5; ++i) edges.push_back({i, (i + 1) % 5});
  for (std::size_t i = 0; i < 5; ++i) edges.push_back({i, i + 5});
  for (std::size_t i = 0; i < 5; ++i) edges.push_back({i + 5, (i + 2) % 5 + 5});
  return edge_order_rotation(Multigraph(10, std::move(edges)));
}

Multigraph octahedron() {
  // Outer triangle 0 1 2, inner triangle 3 4 5 turned by 180 degrees.
  return drawn(6,
               {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 4}, {0, 5}, {1, 5}, {1, 3}, {2, 3}, {2, 4}},
               {on_circle(2, 90), on_circle(2, 210), on_circle(2, 330), on_circle(1, 270), on_circle(1, 30),
                on_circle(1, 150)});
}

std::vector<Entry> all() {
  return {{"single_edge", single_edge()}, {"single_loop", single_loop()}, {"digon", digon()},
          {"triangle", triangle()},       {"c4", cycle4()},               {"theta", theta()},
          {"k4", k4()},                   {"prism", prism()},             {"k33", k33()},
          {"octahedron", octahedron()},   {"petersen", petersen()}};
}

Multigraph by_name(const std::string& name) {
  for (auto& e : all())
    if (e.name == name) return e.graph;
  throw InvalidArgument("unknown corpus graph '" + name + "'");
}

void write_fixtures(const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  for (const auto& e : all()) write_graph_file(dir / (e.name + ".g"), e.graph);
}

}  // namespace ecm::corpus
