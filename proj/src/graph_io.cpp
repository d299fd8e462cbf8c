#include "ecm/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include "ecm/error.hpp"

namespace ecm {

namespace {

std::vector<std::string_view> tokens_of(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::size_t number(std::string_view tok, std::size_t line, const char* what) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(line, std::string("expected a non-negative integer for ") + what + ", got '" + std::string(tok) + "'");
  return v;
}

HalfEdge half_edge_token(std::string_view tok, std::size_t line) {
  if (tok.size() < 4 || tok[0] != 'e') throw ParseError(line, "half-edge token must look like e<edge>.<end>");
  const auto dot = tok.find('.');
  if (dot == std::string_view::npos) throw ParseError(line, "half-edge token must look like e<edge>.<end>");
  const std::size_t e = number(tok.substr(1, dot - 1), line, "edge index");
  const std::size_t end = number(tok.substr(dot + 1), line, "half-edge end");
  if (end > 1) throw ParseError(line, "half-edge end must be 0 or 1");
  return {e, static_cast<int>(end)};
}

}  // namespace

Multigraph parse_graph(std::string_view text) {
  std::optional<std::size_t> vertices;
  std::vector<Edge> edges;
  std::vector<std::pair<std::size_t, std::pair<std::size_t, int>>> orients;  // (line, (edge, head))
  std::vector<std::optional<std::vector<HalfEdge>>> rotation;
  std::size_t rotation_line = 0;
  bool pfaffian = false;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tok = tokens_of(line);
    if (tok.empty()) {
      if (nl == text.size()) break;
      continue;
    }

    if (tok[0] == "vertices") {
      if (tok.size() != 2) throw ParseError(line_no, "expected 'vertices N'");
      if (vertices) throw ParseError(line_no, "duplicate 'vertices' record");
      vertices = number(tok[1], line_no, "vertex count");
      rotation.assign(*vertices, std::nullopt);
    } else if (tok[0] == "edge") {
      if (!vertices) throw ParseError(line_no, "'edge' before 'vertices'");
      if (tok.size() != 3) throw ParseError(line_no, "expected 'edge u v'");
      const std::size_t u = number(tok[1], line_no, "endpoint");
      const std::size_t v = number(tok[2], line_no, "endpoint");
      if (u >= *vertices || v >= *vertices) throw ParseError(line_no, "edge endpoint out of range");
      edges.push_back({u, v});
    } else if (tok[0] == "orient") {
      if (tok.size() != 3) throw ParseError(line_no, "expected 'orient e HEAD_END'");
      const std::size_t e = number(tok[1], line_no, "edge index");
      const std::size_t h = number(tok[2], line_no, "head end");
      if (h > 1) throw ParseError(line_no, "head end must be 0 or 1");
      orients.push_back({line_no, {e, static_cast<int>(h)}});
    } else if (tok[0] == "rotation") {
      if (!vertices) throw ParseError(line_no, "'rotation' before 'vertices'");
      if (tok.size() < 2 || tok[1].empty() || tok[1].back() != ':')
        throw ParseError(line_no, "expected 'rotation v: e<i>.<end> ...'");
      const std::size_t v = number(tok[1].substr(0, tok[1].size() - 1), line_no, "vertex");
      if (v >= *vertices) throw ParseError(line_no, "rotation vertex out of range");
      if (rotation[v]) throw ParseError(line_no, "duplicate rotation for vertex " + std::to_string(v));
      std::vector<HalfEdge> order;
      for (std::size_t i = 2; i < tok.size(); ++i) order.push_back(half_edge_token(tok[i], line_no));
      rotation[v] = std::move(order);
      rotation_line = line_no;
    } else if (tok[0] == "assert") {
      if (tok.size() != 2 || tok[1] != "pfaffian-compatible")
        throw ParseError(line_no, "only 'assert pfaffian-compatible' is recognised");
      pfaffian = true;
    } else {
      throw ParseError(line_no, "unknown record '" + std::string(tok[0]) + "'");
    }
    if (nl == text.size()) break;
  }
  if (!vertices) throw ParseError(line_no, "missing 'vertices' record");

  Multigraph g(*vertices, edges);
  if (!orients.empty()) {
    std::vector<int> heads(edges.size(), 1);
    for (const auto& [line, eh] : orients) {
      if (eh.first >= edges.size()) throw ParseError(line, "orient refers to a missing edge");
      heads[eh.first] = eh.second;
    }
    g = g.with_orientation(std::move(heads));
  }
  std::size_t given = 0;
  for (const auto& r : rotation) given += r.has_value();
  if (given > 0) {
    if (given != rotation.size()) throw ParseError(rotation_line, "rotation must be given for every vertex");
    std::vector<std::vector<HalfEdge>> order;
    for (auto& r : rotation) order.push_back(std::move(*r));
    try {
      g = g.with_rotation(std::move(order));
    } catch (const InvalidArgument& e) {
      throw ParseError(rotation_line, e.what());
    }
  }
  return g.with_pfaffian_assertion(pfaffian);
}

Multigraph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open graph file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

std::string serialize_graph(const Multigraph& g) {
  std::ostringstream out;
  out << "vertices " << g.vertex_count() << '\n';
  for (const auto& e : g.edges()) out << "edge " << e.u << ' ' << e.v << '\n';
  for (std::size_t e = 0; e < g.edge_count(); ++e)
    if (g.head_end(e) != 1) out << "orient " << e << ' ' << g.head_end(e) << '\n';
  if (g.has_rotation())
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      out << "rotation " << v << ':';
      for (auto h : g.half_edges_at(v)) out << " e" << h.edge << '.' << h.end;
      out << '\n';
    }
  if (g.pfaffian_asserted()) out << "assert pfaffian-compatible\n";
  return out.str();
}

void write_graph_file(const std::filesystem::path& path, const Multigraph& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write graph file " + path.string());
  out << serialize_graph(g);
}

}  // namespace ecm
