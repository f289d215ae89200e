#pragma once

#include <optional>

#include "bipow/graph.hpp"

namespace bipow {

/// Longest induced cycle of g, or nullopt when g is acyclic.
///
/// Exact exponential search: for every anchor a in increasing order, grow
/// induced paths a, p1, ..., pt over vertices greater than a, keep the path
/// interior chordless, and close a hole whenever the new end is adjacent to
/// a. Neighbours are tried in increasing order and a branch is cut once its
/// path length plus the still-usable vertices cannot beat the incumbent.
/// Among holes of maximum length the first one found is returned.
std::optional<Hole> largest_hole(const Graph& g);

/// Length of the largest hole; 0 for acyclic graphs.
int chordality(const Graph& g);

/// First hole found with more than `k` vertices, if any. Same search order
/// as largest_hole() but stops at the first qualifying closure.
std::optional<Hole> find_hole_longer_than(const Graph& g, int k);

bool exists_hole_longer_than(const Graph& g, int k);

/// chordality(g) <= k, decided with the early-exit search. Requires k >= 3.
bool is_k_chordal(const Graph& g, int k);

/// Bipartite and 4-chordal.
bool is_chordal_bipartite(const Graph& g);

inline constexpr int kOracleDefaultCap = 12;

/// Brute force over all 2^n vertex subsets: the largest S whose induced
/// subgraph is a single cycle (connected, every degree 2). Shares no code
/// with the path search. Throws TooLarge when n exceeds `cap`.
int chordality_oracle(const Graph& g, int cap = kOracleDefaultCap);

}  // namespace bipow
