#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "ecm/graph.hpp"

namespace ecm {

/// Line-oriented graph text:
///
///   vertices 4
///   edge 0 1                      # edge indices follow record order
///   orient 0 0                    # head of edge 0 is end 0 (default end 1)
///   rotation 0: e0.0 e2.0 e1.0    # half-edges at a vertex, in order
///   assert pfaffian-compatible
///
/// '#' starts a comment. A rotation, if any, must be given for every vertex.
Multigraph parse_graph(std::string_view text);
Multigraph read_graph_file(const std::filesystem::path& path);

/// Inverse of parse_graph: parse_graph(serialize_graph(g)) == g.
std::string serialize_graph(const Multigraph& g);
void write_graph_file(const std::filesystem::path& path, const Multigraph& g);

}  // namespace ecm
