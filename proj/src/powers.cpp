#include "bipow/powers.hpp"

#include <string>

namespace bipow {
namespace {

template <typename Keep>
Graph power_by_distance(const Graph& g, Keep keep) {
  const DistanceMatrix d = distance_matrix(g);
  Graph out(g.order());
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (d(u, v) != kUnreachable && keep(d(u, v))) out.add_edge(u, v);
    }
  }
  return out;
}

}  // namespace

Graph graph_power(const Graph& g, int m) {
  if (m < 1) throw InvalidExponent("power exponent must be >= 1, got " + std::to_string(m));
  return power_by_distance(g, [m](int d) { return d <= m; });
}

Graph bipartite_power(const Graph& g, int m) {
  if (m < 1) throw InvalidExponent("bipartite power exponent must be >= 1, got " + std::to_string(m));
  if (m % 2 == 0) throw EvenExponent("bipartite power exponent must be odd, got " + std::to_string(m));
  if (!is_bipartite(g)) throw NotBipartite("bipartite power of a non-bipartite graph");
  return power_by_distance(g, [m](int d) { return d % 2 == 1 && d <= m; });
}

}  // namespace bipow
