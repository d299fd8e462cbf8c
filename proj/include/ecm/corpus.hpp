#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "ecm/graph.hpp"

namespace ecm::corpus {

// Every corpus graph carries a rotation. Planar members use the clockwise
// rotation of a fixed straight-line (or arc) drawing and are flagged
// Pfaffian-compatible; the rest use (edge, end) order.

Multigraph single_edge();
Multigraph single_loop();
Multigraph digon();
Multigraph triangle();
Multigraph cycle4();
Multigraph theta();
Multigraph k4();
Multigraph prism();
Multigraph k33();
Multigraph petersen();
Multigraph octahedron();

struct Entry {
  std::string name;
  Multigraph graph;
};

/// All members in a fixed order, Petersen last.
std::vector<Entry> all();
/// Looks a member up by name; throws InvalidArgument for unknown names.
Multigraph by_name(const std::string& name);

/// Writes <name>.g for every member into dir.
void write_fixtures(const std::filesystem::path& dir);

}  // namespace ecm::corpus
