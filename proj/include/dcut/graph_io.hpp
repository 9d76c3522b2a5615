#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "dcut/graph.hpp"

namespace dcut {

// Line-oriented text format, 1-indexed:
//   c <comment>
//   p edge <n> <m>
//   e <u> <v>        (m times)

/// Throws ParseError naming the offending line.
Graph parse_graph(std::istream& in);
Graph parse_graph(std::string_view text);
Graph read_graph_file(const std::filesystem::path& path);

/// Canonical form: header then edges with u < v in lexicographic order.
void write_graph(std::ostream& out, const Graph& g);
std::string serialize_graph(const Graph& g);

/// Graphviz export, for external viewers only.
void write_dot(std::ostream& out, const Graph& g);

}  // namespace dcut
