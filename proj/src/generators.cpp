#include "bipow/generators.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <queue>
#include <string>

#include "bipow/rng.hpp"

namespace bipow {
namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw GraphError(what);
}

}  // namespace

Graph gen_random_bipartite(int n_a, int n_b, double edge_prob, std::uint64_t seed, bool connect) {
  require(n_a >= 1 && n_b >= 1, "gen_random_bipartite: both sides need at least one vertex");
  require(edge_prob >= 0.0 && edge_prob <= 1.0, "gen_random_bipartite: edge probability outside [0, 1]");
  Rng rng(seed);
  Graph g(n_a + n_b);
  for (Vertex u = 0; u < n_a; ++u) {
    for (Vertex v = n_a; v < n_a + n_b; ++v) {
      if (rng.bernoulli(edge_prob)) g.add_edge(u, v);
    }
  }
  if (!connect) return g;

  // Lay a spanning path through a random order that alternates sides; once
  // the smaller side runs out, leftovers attach to a random vertex of it.
  std::vector<Vertex> big(static_cast<std::size_t>(n_a));
  std::vector<Vertex> small(static_cast<std::size_t>(n_b));
  std::iota(big.begin(), big.end(), 0);
  std::iota(small.begin(), small.end(), n_a);
  rng.shuffle(std::span(big));
  rng.shuffle(std::span(small));
  if (big.size() < small.size()) std::swap(big, small);
  for (std::size_t i = 0; i < small.size(); ++i) {
    g.add_edge(big[i], small[i]);
    if (i + 1 < big.size()) g.add_edge(small[i], big[i + 1]);
  }
  for (std::size_t i = small.size() + 1; i < big.size(); ++i) {
    const auto k = static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(small.size()) - 1));
    g.add_edge(big[i], small[k]);
  }
  return g;
}

Graph gen_random_tree(int n, std::uint64_t seed) {
  require(n >= 1, "gen_random_tree: n must be positive");
  Graph g(n);
  if (n == 1) return g;
  if (n == 2) {
    g.add_edge(0, 1);
    return g;
  }
  Rng rng(seed);
  std::vector<Vertex> code(static_cast<std::size_t>(n - 2));
  for (auto& c : code) c = static_cast<Vertex>(rng.uniform_int(0, n - 1));

  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (Vertex c : code) ++degree[c];
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
  for (Vertex v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.push(v);
  }
  for (Vertex c : code) {
    const Vertex leaf = leaves.top();
    leaves.pop();
    g.add_edge(leaf, c);
    if (--degree[c] == 1) leaves.push(c);
  }
  const Vertex a = leaves.top();
  leaves.pop();
  g.add_edge(a, leaves.top());
  return g;
}

Graph gen_random_graph(int n, double edge_prob, std::uint64_t seed) {
  require(n >= 0, "gen_random_graph: negative n");
  require(edge_prob >= 0.0 && edge_prob <= 1.0, "gen_random_graph: edge probability outside [0, 1]");
  Rng rng(seed);
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (rng.bernoulli(edge_prob)) g.add_edge(u, v);
    }
  }
  return g;
}

Graph gen_even_cycle(int n) {
  require(n >= 4 && n % 2 == 0, "gen_even_cycle: n must be even and >= 4");
  Graph g(n);
  for (Vertex v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph gen_complete_bipartite(int a, int b) {
  require(a >= 1 && b >= 1, "gen_complete_bipartite: sides must be positive");
  Graph g(a + b);
  for (Vertex u = 0; u < a; ++u) {
    for (Vertex v = a; v < a + b; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph gen_path(int n) {
  require(n >= 1, "gen_path: n must be positive");
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  require(static_cast<int>(perm.size()) == g.order(), "relabel: permutation size mismatch");
  Graph out(g.order());
  for (auto [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
  return out;
}

}  // namespace bipow
