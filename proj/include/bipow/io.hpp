#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

#include "bipow/graph.hpp"

namespace bipow {

/// Parses the edge-list format:
///
///     # optional comments
///     n <count>
///     <u> <v>
///     ...
///
/// Blank lines and '#' lines are skipped anywhere. Duplicate edges collapse;
/// self-loops, out-of-range endpoints and malformed lines raise ParseError
/// with the 1-based line number.
Graph read_edge_list(std::istream& in);
Graph read_edge_list(std::string_view text);

/// Emits "n <count>" followed by one "u v" line per edge, u < v, sorted.
void write_edge_list(std::ostream& out, const Graph& g);
std::string write_edge_list(const Graph& g);

/// Graphviz rendering. Edges between cyclically consecutive entries of
/// `highlight` are drawn bold red, their vertices filled.
std::string write_dot(const Graph& g, std::span<const Vertex> highlight = {});

}  // namespace bipow
