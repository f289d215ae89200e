#include "bipow/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace bipow {

OddCycle::OddCycle(std::vector<int> cycle)
    : GraphError("graph is not bipartite: odd cycle of length " + std::to_string(cycle.size())),
      cycle_(std::move(cycle)) {}

ParseError::ParseError(int line, const std::string& what)
    : GraphError("line " + std::to_string(line) + ": " + what), line_(line) {}

ClaimViolation::ClaimViolation(std::string claim, const std::string& detail)
    : GraphError(claim + " violated: " + detail), claim_(std::move(claim)) {}

Graph::Graph(int n) {
  if (n < 0) throw IndexOutOfRange("negative vertex count");
  n_ = n;
  adj_.resize(static_cast<std::size_t>(n));
  matrix_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

bool Graph::add_edge(Vertex u, Vertex v) {
  if (!contains(u) || !contains(v)) {
    throw IndexOutOfRange("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                          ") outside vertex range [0, " + std::to_string(n_) + ")");
  }
  if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
  if (matrix_[index(u, v)] != 0) return false;
  matrix_[index(u, v)] = 1;
  matrix_[index(v, u)] = 1;
  auto insert_sorted = [](std::vector<Vertex>& list, Vertex x) {
    list.insert(std::lower_bound(list.begin(), list.end(), x), x);
  };
  insert_sorted(adj_[u], v);
  insert_sorted(adj_[v], u);
  ++edge_count_;
  return true;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  if (!g.contains(source)) throw IndexOutOfRange("BFS source out of range");
  std::vector<int> dist(static_cast<std::size_t>(g.order()), kUnreachable);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

DistanceMatrix distance_matrix(const Graph& g) {
  const int n = g.order();
  DistanceMatrix d(n, n);
  for (Vertex s = 0; s < n; ++s) {
    const auto row = bfs_distances(g, s);
    for (Vertex t = 0; t < n; ++t) d(s, t) = row[t];
  }
  return d;
}

namespace {

// Colours every component from its lowest vertex. On conflict returns the
// offending edge instead of a partition.
struct Colouring {
  std::vector<int> colour;
  std::vector<Vertex> parent;
  std::vector<int> depth;
  Edge conflict{-1, -1};
};

Colouring colour_bfs(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  Colouring c{std::vector<int>(n, -1), std::vector<Vertex>(n, -1), std::vector<int>(n, 0), {-1, -1}};
  for (Vertex root = 0; root < g.order(); ++root) {
    if (c.colour[root] != -1) continue;
    c.colour[root] = 0;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(u)) {
        if (c.colour[w] == -1) {
          c.colour[w] = 1 - c.colour[u];
          c.parent[w] = u;
          c.depth[w] = c.depth[u] + 1;
          queue.push_back(w);
        } else if (c.colour[w] == c.colour[u]) {
          c.conflict = {u, w};
          return c;
        }
      }
    }
  }
  return c;
}

}  // namespace

Bipartition bipartition(const Graph& g) {
  Colouring c = colour_bfs(g);
  if (c.conflict.first != -1) {
    // Both endpoints sit at the same BFS depth; climb to the common ancestor.
    auto [u, w] = c.conflict;
    std::vector<Vertex> left{u};
    std::vector<Vertex> right{w};
    while (u != w) {
      u = c.parent[u];
      w = c.parent[w];
      if (u == w) break;
      left.push_back(u);
      right.push_back(w);
    }
    left.push_back(u);
    left.insert(left.end(), right.rbegin(), right.rend());
    throw OddCycle(std::move(left));
  }
  Bipartition part;
  part.side.resize(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) {
    part.side[v] = static_cast<std::uint8_t>(c.colour[v]);
    (c.colour[v] == 0 ? part.side_a : part.side_b).push_back(v);
  }
  return part;
}

bool is_bipartite(const Graph& g) { return colour_bfs(g).conflict.first == -1; }

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<Vertex> chosen(vertices.begin(), vertices.end());
  std::sort(chosen.begin(), chosen.end());
  chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
  for (Vertex v : chosen) {
    if (!g.contains(v)) throw IndexOutOfRange("induced_subgraph: vertex " + std::to_string(v) + " out of range");
  }
  std::vector<Vertex> to_child(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < chosen.size(); ++i) to_child[chosen[i]] = static_cast<Vertex>(i);

  Graph sub(static_cast<int>(chosen.size()));
  for (std::size_t i = 0; i < chosen.size(); ++i) {
    for (Vertex w : g.neighbors(chosen[i])) {
      const Vertex j = to_child[w];
      if (j > static_cast<Vertex>(i)) sub.add_edge(static_cast<Vertex>(i), j);
    }
  }
  return {std::move(sub), std::move(chosen)};
}

bool is_induced_cycle(const Graph& g, std::span<const Vertex> seq) {
  const std::size_t len = seq.size();
  if (len < 3) return false;
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : seq) {
    if (!g.contains(v) || seen[v]) return false;
    seen[v] = 1;
  }
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t j = i + 1; j < len; ++j) {
      const bool cyclic_neighbours = (j == i + 1) || (i == 0 && j == len - 1);
      if (g.has_edge(seq[i], seq[j]) != cyclic_neighbours) return false;
    }
  }
  return true;
}

Path shortest_path(const Graph& g, Vertex u, Vertex v) {
  if (!g.contains(u) || !g.contains(v)) throw IndexOutOfRange("shortest_path: endpoint out of range");
  const auto dist = bfs_distances(g, u);
  if (dist[v] == kUnreachable) {
    throw Unreachable("no path between " + std::to_string(u) + " and " + std::to_string(v));
  }
  std::vector<Vertex> reversed{v};
  Vertex cur = v;
  while (cur != u) {
    // Neighbour lists are sorted, so the first match is the lowest index.
    for (Vertex w : g.neighbors(cur)) {
      if (dist[w] == dist[cur] - 1) {
        cur = w;
        break;
      }
    }
    reversed.push_back(cur);
  }
  return Path{{reversed.rbegin(), reversed.rend()}};
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  const auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d == kUnreachable; });
}

}  // namespace bipow
