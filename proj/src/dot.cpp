#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <set>

#include "trimobius/error.hpp"
#include "trimobius/io.hpp"

namespace trimobius::io {

void write_dot(std::ostream& out, const HasseGraph& graph) {
  std::string buf = "digraph hasse {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (std::uint64_t v = 1; v <= graph.n_elements; ++v) buf += "  " + std::to_string(v) + ";\n";
  for (const auto& e : graph.edges) {
    buf += "  " + std::to_string(e.lower) + " -> " + std::to_string(e.upper) + ";\n";
  }
  buf += "}\n";
  out << buf;
}

namespace {

std::uint64_t parse_node(std::string_view token, std::size_t line_no) {
  std::uint64_t v = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, v);
  if (ec != std::errc() || ptr != end || v == 0) {
    throw FormatError("DOT line " + std::to_string(line_no) + ": bad node id '" +
                      std::string(token) + "'");
  }
  return v;
}

}  // namespace

HasseGraph parse_dot(std::istream& in) {
  HasseGraph graph;
  std::set<HasseEdge> edges;
  std::string raw;
  std::size_t line_no = 0;
  bool opened = false, closed = false;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line(raw);
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
    while (!line.empty() && (line.back() == ' ' || line.back() == '\r')) line.remove_suffix(1);
    if (line.empty()) continue;
    if (!opened) {
      if (!line.starts_with("digraph")) throw FormatError("DOT input must start with a digraph");
      opened = true;
      continue;
    }
    if (line == "}") {
      closed = true;
      break;
    }
    if (line.starts_with("rankdir") || line.starts_with("node ")) continue;
    if (!line.ends_with(";")) throw FormatError("DOT line " + std::to_string(line_no) + ": missing ';'");
    line.remove_suffix(1);
    if (const auto arrow = line.find(" -> "); arrow != std::string_view::npos) {
      const HasseEdge e{parse_node(line.substr(0, arrow), line_no),
                        parse_node(line.substr(arrow + 4), line_no)};
      if (!edges.insert(e).second) {
        throw FormatError("DOT line " + std::to_string(line_no) + ": duplicate edge");
      }
      graph.n_elements = std::max({graph.n_elements, e.lower, e.upper});
    } else {
      graph.n_elements = std::max(graph.n_elements, parse_node(line, line_no));
    }
  }
  if (!closed) throw FormatError("DOT input is not terminated by '}'");
  graph.edges.assign(edges.begin(), edges.end());
  return graph;
}

}  // namespace trimobius::io
