#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "bipow/errors.hpp"

namespace bipow {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on the dense vertex set {0, ..., n-1}.
///
/// Neighbor lists are kept sorted, and an n x n byte matrix answers
/// adjacency queries in O(1). Graphs are built with add_edge() and treated
/// as values afterwards.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  /// Builds a graph from an edge list. Duplicate edges collapse.
  static Graph from_edges(int n, std::span<const Edge> edges);

  int order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edge_count_; }

  /// Inserts {u, v}; returns false when the edge already existed.
  /// Throws IndexOutOfRange, or GraphError on a self-loop.
  bool add_edge(Vertex u, Vertex v);

  bool has_edge(Vertex u, Vertex v) const noexcept {
    return contains(u) && contains(v) && matrix_[index(u, v)] != 0;
  }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(v); }
  int degree(Vertex v) const { return static_cast<int>(adj_.at(v).size()); }
  bool contains(Vertex v) const noexcept { return v >= 0 && v < n_; }

  /// All edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  std::size_t index(Vertex u, Vertex v) const noexcept {
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
  }

  int n_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::uint8_t> matrix_;
};

/// Cyclic vertex sequence; a hole when chordless in its host graph.
struct Hole {
  std::vector<Vertex> vertices;

  int length() const noexcept { return static_cast<int>(vertices.size()); }
  friend bool operator==(const Hole&, const Hole&) = default;
};

/// Vertex sequence whose length counts edges.
struct Path {
  std::vector<Vertex> vertices;

  int length() const noexcept { return static_cast<int>(vertices.size()) - 1; }
  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }
  friend bool operator==(const Path&, const Path&) = default;
};

struct Bipartition {
  std::vector<Vertex> side_a;
  std::vector<Vertex> side_b;
  /// side[v] is 0 for side_a and 1 for side_b.
  std::vector<std::uint8_t> side;

  bool same_side(Vertex u, Vertex v) const { return side.at(u) == side.at(v); }
};

using DistanceMatrix = Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic>;

/// Distance sentinel for vertex pairs in different components.
inline constexpr int kUnreachable = std::numeric_limits<int>::max();

/// Hop distances from `source`; kUnreachable where no path exists.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

/// All-pairs hop distances by one BFS per vertex.
DistanceMatrix distance_matrix(const Graph& g);

/// Two-colouring by BFS. Vertices of each component are coloured starting
/// from its lowest index on side A, so an edgeless graph lands entirely in A.
/// Throws OddCycle with a certificate when g is not bipartite.
Bipartition bipartition(const Graph& g);

bool is_bipartite(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  /// to_parent[i] is the vertex of the parent graph that i stands for.
  std::vector<Vertex> to_parent;
};

/// Subgraph induced on `vertices`. New vertex i corresponds to the i-th
/// entry of `vertices` after sorting and removing duplicates.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// True iff `seq` is a hole of g: at least three distinct vertices, cyclic
/// neighbours adjacent, no other pair adjacent. Malformed input yields false.
bool is_induced_cycle(const Graph& g, std::span<const Vertex> seq);

/// Deterministic shortest u-v path. BFS from u, then walk back from v always
/// stepping to the lowest-indexed neighbour one level closer to u.
/// Throws Unreachable or IndexOutOfRange.
Path shortest_path(const Graph& g, Vertex u, Vertex v);

bool is_connected(const Graph& g);

}  // namespace bipow
