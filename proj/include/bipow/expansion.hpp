#pragma once

#include <span>
#include <vector>

#include "bipow/graph.hpp"

namespace bipow {

/// A member of the bag-expansion family of a base graph H: every base vertex
/// v is replaced by an independent bag B_v, and x in B_u, y in B_v are
/// adjacent exactly when u ~ v in H.
///
/// Copies of v occupy the contiguous block [offset[v], offset[v] + bag_size[v])
/// of the expanded graph, blocks ordered by base index.
struct BagExpansion {
  Graph base;
  std::vector<int> bag_size;
  Graph expanded;
  std::vector<Vertex> copy_to_base;
  std::vector<std::vector<Vertex>> base_to_copies;

  /// The k-th copy (0-based) of base vertex v.
  Vertex copy(Vertex v, int k) const { return base_to_copies.at(v).at(k); }
  Vertex first_copy(Vertex v) const { return base_to_copies.at(v).front(); }
};

/// Throws EmptyBag if a count is below 1 and GraphError if the number of
/// counts differs from h.order().
BagExpansion expand(const Graph& h, std::span<const int> bag_sizes);

/// Maps a hole of the expanded graph of length >= 6 onto the base graph.
/// Same-bag vertices are twins, so such a hole meets every bag at most once
/// and its image is a hole of the same length.
///
/// Throws HoleTooShort for length < 6 (two twins and two common neighbours
/// form a 4-hole whose image is a single edge), NotInduced when `hole` is not
/// a hole of exp.expanded or its image is not one of exp.base, and
/// BagCollision when two vertices share a bag.
Hole project_hole(const BagExpansion& exp, const Hole& hole);

/// Test helper: whether chordality(base) <= k implies chordality(expanded) <= k.
bool preserves_k_chordality_check(const BagExpansion& exp, int k);

}  // namespace bipow
