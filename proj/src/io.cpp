#include "bipow/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <istream>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

namespace bipow {
namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

std::optional<long long> parse_int(std::string_view token) {
  long long value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end) return std::nullopt;
  return value;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  int line_no = 0;
  std::optional<Graph> g;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = split_ws(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;

    if (!g) {
      if (tokens.size() != 2 || tokens[0] != "n") throw ParseError(line_no, "expected header \"n <count>\"");
      const auto count = parse_int(tokens[1]);
      if (!count || *count < 0 || *count > 1'000'000) throw ParseError(line_no, "invalid vertex count");
      g.emplace(static_cast<int>(*count));
      continue;
    }

    if (tokens.size() != 2) throw ParseError(line_no, "expected \"<u> <v>\"");
    const auto u = parse_int(tokens[0]);
    const auto v = parse_int(tokens[1]);
    if (!u || !v) throw ParseError(line_no, "vertex is not an integer");
    if (*u < 0 || *v < 0 || *u >= g->order() || *v >= g->order()) {
      throw ParseError(line_no, "vertex out of range [0, " + std::to_string(g->order()) + ")");
    }
    if (*u == *v) throw ParseError(line_no, "self-loop");
    g->add_edge(static_cast<Vertex>(*u), static_cast<Vertex>(*v));
  }
  if (!g) throw ParseError(line_no, "missing header \"n <count>\"");
  return std::move(*g);
}

Graph read_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "n " << g.order() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

std::string write_dot(const Graph& g, std::span<const Vertex> highlight) {
  std::set<Edge> marked;
  for (std::size_t i = 0; i < highlight.size() && highlight.size() > 1; ++i) {
    Vertex a = highlight[i];
    Vertex b = highlight[(i + 1) % highlight.size()];
    marked.insert({std::min(a, b), std::max(a, b)});
  }
  const std::set<Vertex> on_cycle(highlight.begin(), highlight.end());

  std::ostringstream out;
  out << "graph G {\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    out << "  " << v;
    if (on_cycle.count(v)) out << " [style=filled, fillcolor=lightcoral]";
    out << ";\n";
  }
  for (auto e : g.edges()) {
    out << "  " << e.first << " -- " << e.second;
    if (marked.count(e)) out << " [color=red, penwidth=2.5]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace bipow
