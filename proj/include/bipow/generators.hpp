#pragma once

#include <cstdint>

#include "bipow/graph.hpp"

namespace bipow {

/// Random bipartite graph with sides {0, ..., nA-1} and {nA, ..., nA+nB-1};
/// every cross pair is an edge with probability `edge_prob`. With `connect`
/// set, cross edges are added along a random vertex order that alternates
/// between the sides, which makes the graph connected.
Graph gen_random_bipartite(int n_a, int n_b, double edge_prob, std::uint64_t seed, bool connect = false);

/// Uniform labelled tree on n vertices, decoded from a random Pruefer sequence.
Graph gen_random_tree(int n, std::uint64_t seed);

/// Erdos-Renyi G(n, p).
Graph gen_random_graph(int n, double edge_prob, std::uint64_t seed);

/// Cycle 0-1-...-(n-1)-0; n must be even and >= 4.
Graph gen_even_cycle(int n);

/// K_{a,b} with sides {0..a-1} and {a..a+b-1}.
Graph gen_complete_bipartite(int a, int b);

/// Path 0-1-...-(n-1).
Graph gen_path(int n);

/// g with vertex v renamed to perm[v].
Graph relabel(const Graph& g, std::span<const Vertex> perm);

}  // namespace bipow
