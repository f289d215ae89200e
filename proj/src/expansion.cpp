#include "bipow/expansion.hpp"

#include <string>

#include "bipow/chordality.hpp"

namespace bipow {

BagExpansion expand(const Graph& h, std::span<const int> bag_sizes) {
  if (static_cast<int>(bag_sizes.size()) != h.order()) {
    throw GraphError("expand: " + std::to_string(bag_sizes.size()) + " bag sizes for " +
                     std::to_string(h.order()) + " base vertices");
  }
  BagExpansion exp;
  exp.base = h;
  exp.bag_size.assign(bag_sizes.begin(), bag_sizes.end());
  exp.base_to_copies.resize(static_cast<std::size_t>(h.order()));

  Vertex next = 0;
  for (Vertex v = 0; v < h.order(); ++v) {
    if (bag_sizes[v] < 1) throw EmptyBag("bag of base vertex " + std::to_string(v) + " is empty");
    for (int k = 0; k < bag_sizes[v]; ++k) {
      exp.base_to_copies[v].push_back(next++);
      exp.copy_to_base.push_back(v);
    }
  }

  exp.expanded = Graph(next);
  for (auto [u, v] : h.edges()) {
    for (Vertex x : exp.base_to_copies[u]) {
      for (Vertex y : exp.base_to_copies[v]) exp.expanded.add_edge(x, y);
    }
  }
  return exp;
}

Hole project_hole(const BagExpansion& exp, const Hole& hole) {
  if (hole.length() < 6) {
    throw HoleTooShort("projection needs a hole of length >= 6, got " + std::to_string(hole.length()));
  }
  if (!is_induced_cycle(exp.expanded, hole.vertices)) throw NotInduced("input is not a hole of the expanded graph");

  std::vector<std::uint8_t> bag_used(static_cast<std::size_t>(exp.base.order()), 0);
  Hole image;
  image.vertices.reserve(hole.vertices.size());
  for (Vertex x : hole.vertices) {
    const Vertex v = exp.copy_to_base.at(x);
    if (bag_used[v]) throw BagCollision("two hole vertices lie in the bag of base vertex " + std::to_string(v));
    bag_used[v] = 1;
    image.vertices.push_back(v);
  }
  if (!is_induced_cycle(exp.base, image.vertices)) throw NotInduced("projected cycle is not a hole of the base graph");
  return image;
}

bool preserves_k_chordality_check(const BagExpansion& exp, int k) {
  return chordality(exp.base) > k || chordality(exp.expanded) <= k;
}

}  // namespace bipow
