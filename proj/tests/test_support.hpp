#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "bipow/generators.hpp"
#include "bipow/graph.hpp"
#include "bipow/rng.hpp"

namespace bipow::testing {

inline Graph cycle_graph(int n) {
  Graph g(n);
  for (Vertex v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

inline Graph complete_graph(int n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

inline Graph circulant(int n, std::initializer_list<int> offsets) {
  Graph g(n);
  for (Vertex v = 0; v < n; ++v) {
    for (int d : offsets) g.add_edge(v, (v + d) % n);
  }
  return g;
}

/// Floyd-Warshall with a large finite sentinel, for cross-checking BFS.
inline std::vector<std::vector<int>> floyd_warshall(const Graph& g) {
  const int n = g.order();
  const int inf = 1 << 28;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (Vertex v = 0; v < n; ++v) d[v][v] = 0;
  for (auto [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

/// Hole test straight from the definition: all C(len, 2) pairs examined.
inline bool naive_is_hole(const Graph& g, const std::vector<Vertex>& seq) {
  const int len = static_cast<int>(seq.size());
  if (len < 3) return false;
  for (int i = 0; i < len; ++i) {
    if (seq[i] < 0 || seq[i] >= g.order()) return false;
    for (int j = 0; j < i; ++j)
      if (seq[i] == seq[j]) return false;
  }
  for (int i = 0; i < len; ++i) {
    for (int j = i + 1; j < len; ++j) {
      const int gap = j - i;
      const bool consecutive = gap == 1 || gap == len - 1;
      if (consecutive != g.has_edge(seq[i], seq[j])) return false;
    }
  }
  return true;
}

/// Mixed corpus of small graphs: G(n, p) with varied density.
inline std::vector<Graph> random_corpus(std::uint64_t seed, int count, int min_n, int max_n) {
  Rng rng(seed);
  std::vector<Graph> out;
  for (int i = 0; i < count; ++i) {
    const int n = static_cast<int>(rng.uniform_int(min_n, max_n));
    out.push_back(gen_random_graph(n, 0.05 + 0.8 * rng.uniform01(), rng.next()));
  }
  return out;
}

inline std::vector<Graph> bipartite_corpus(std::uint64_t seed, int count, int min_n, int max_n) {
  Rng rng(seed);
  std::vector<Graph> out;
  for (int i = 0; i < count; ++i) {
    const int n = static_cast<int>(rng.uniform_int(std::max(2, min_n), max_n));
    const int a = static_cast<int>(rng.uniform_int(1, n - 1));
    out.push_back(gen_random_bipartite(a, n - a, 0.05 + 0.6 * rng.uniform01(), rng.next(), rng.bernoulli(0.5)));
  }
  return out;
}

}  // namespace bipow::testing
