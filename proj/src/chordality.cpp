#include "bipow/chordality.hpp"

#include <bit>
#include <cstdint>
#include <string>

namespace bipow {
namespace {

class HoleSearch {
 public:
  // threshold < 0: find a maximum hole. Otherwise stop at the first hole
  // longer than threshold.
  HoleSearch(const Graph& g, int threshold)
      : g_(g),
        threshold_(threshold),
        on_path_(static_cast<std::size_t>(g.order()), 0),
        blocked_(static_cast<std::size_t>(g.order()), 0) {}

  std::optional<Hole> run() {
    const int n = g_.order();
    for (anchor_ = 0; anchor_ < n && !done_; ++anchor_) {
      // A hole anchored at a uses only vertices >= a.
      if (n - anchor_ <= floor()) break;
      free_ = n - anchor_ - 1;
      path_.assign(1, anchor_);
      on_path_[anchor_] = 1;
      extend();
      on_path_[anchor_] = 0;
    }
    return best_.vertices.empty() ? std::nullopt : std::optional<Hole>(best_);
  }

 private:
  // Holes of this length or shorter are not worth finding.
  int floor() const { return threshold_ >= 0 ? std::max(threshold_, best_.length()) : best_.length(); }

  bool usable(Vertex w) const { return w > anchor_ && !on_path_[w] && blocked_[w] == 0; }

  void extend() {
    if (static_cast<int>(path_.size()) + free_ <= floor()) return;
    const Vertex last = path_.back();
    for (Vertex v : g_.neighbors(last)) {
      if (done_) return;
      if (!usable(v)) continue;
      if (path_.size() >= 2 && g_.has_edge(v, anchor_)) {
        record(v);
        continue;
      }
      push(v);
      extend();
      pop();
    }
  }

  void record(Vertex closing) {
    const int len = static_cast<int>(path_.size()) + 1;
    if (len <= floor()) return;
    best_.vertices = path_;
    best_.vertices.push_back(closing);
    if (threshold_ >= 0) done_ = true;
  }

  // The old end becomes interior: its neighbours can no longer join the path.
  void push(Vertex v) {
    const Vertex old_last = path_.back();
    --free_;
    on_path_[v] = 1;
    path_.push_back(v);
    if (old_last == anchor_) return;
    for (Vertex w : g_.neighbors(old_last)) {
      if (usable(w)) --free_;
      ++blocked_[w];
    }
  }

  void pop() {
    const Vertex v = path_.back();
    path_.pop_back();
    const Vertex old_last = path_.back();
    if (old_last != anchor_) {
      for (Vertex w : g_.neighbors(old_last)) {
        --blocked_[w];
        if (usable(w)) ++free_;
      }
    }
    on_path_[v] = 0;
    ++free_;
  }

  const Graph& g_;
  const int threshold_;
  Vertex anchor_ = 0;
  int free_ = 0;
  bool done_ = false;
  std::vector<Vertex> path_;
  std::vector<std::uint8_t> on_path_;
  std::vector<int> blocked_;
  Hole best_;
};

}  // namespace

std::optional<Hole> largest_hole(const Graph& g) { return HoleSearch(g, -1).run(); }

int chordality(const Graph& g) {
  const auto hole = largest_hole(g);
  return hole ? hole->length() : 0;
}

std::optional<Hole> find_hole_longer_than(const Graph& g, int k) {
  return HoleSearch(g, std::max(k, 0)).run();
}

bool exists_hole_longer_than(const Graph& g, int k) { return find_hole_longer_than(g, k).has_value(); }

bool is_k_chordal(const Graph& g, int k) {
  if (k < 3) throw GraphError("k-chordality needs k >= 3, got " + std::to_string(k));
  return !exists_hole_longer_than(g, k);
}

bool is_chordal_bipartite(const Graph& g) { return is_bipartite(g) && is_k_chordal(g, 4); }

int chordality_oracle(const Graph& g, int cap) {
  const int n = g.order();
  if (n > cap || n > 30) {
    throw TooLarge("oracle limited to " + std::to_string(std::min(cap, 30)) + " vertices, got " + std::to_string(n));
  }
  std::vector<std::uint32_t> nbr(static_cast<std::size_t>(n), 0);
  for (auto [u, v] : g.edges()) {
    nbr[u] |= 1u << v;
    nbr[v] |= 1u << u;
  }

  int best = 0;
  const std::uint32_t limit = n == 0 ? 1u : (1u << n);
  for (std::uint32_t set = 1; set < limit; ++set) {
    const int size = std::popcount(set);
    if (size < 3 || size <= best) continue;

    bool two_regular = true;
    for (std::uint32_t rest = set; rest != 0 && two_regular; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      two_regular = std::popcount(nbr[v] & set) == 2;
    }
    if (!two_regular) continue;

    std::uint32_t reached = set & (~set + 1);
    std::uint32_t frontier = reached;
    while (frontier != 0) {
      std::uint32_t next = 0;
      for (std::uint32_t rest = frontier; rest != 0; rest &= rest - 1) {
        next |= nbr[std::countr_zero(rest)] & set;
      }
      frontier = next & ~reached;
      reached |= next;
    }
    if (reached == set) best = size;
  }
  return best;
}

}  // namespace bipow
