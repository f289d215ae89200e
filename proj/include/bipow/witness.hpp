#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bipow/expansion.hpp"
#include "bipow/graph.hpp"

namespace bipow {

/// Everything needed to pull a hole C = u_0 ... u_{p-1} of G^[m] back to G.
///
/// P_i is the shortest u_{i-1} -> u_i path in G (indices mod p), H is the
/// subgraph of G induced on their union, and H' is a bag expansion of H in
/// which path i owns a private copy of each of its vertices except the first.
/// Q'_i runs from the copy of u_{i-1} owned by path i-1 through path i's own
/// copies, so the Q_i = Q'_i minus its first vertex partition V(H').
///
/// Vertices of H' sit on a circle: for i = 0, ..., p-1 the copy of u_{i-1}
/// followed by the interior of Q'_i. `owner[x]` is the i with x on Q_i.
struct PathSystem {
  Hole hole;
  int m = 1;
  std::vector<Path> paths;
  Graph h;
  std::vector<Vertex> h_to_g;
  BagExpansion expansion;
  std::vector<Path> q_paths;
  std::vector<Vertex> hole_copies;
  std::vector<Vertex> arrangement;
  std::vector<int> position;
  std::vector<int> owner;

  int p() const noexcept { return hole.length(); }
  const Graph& h_prime() const noexcept { return expansion.expanded; }
  /// Vertices of Q_i in clockwise order (Q'_i without its first vertex).
  std::span<const Vertex> q(int i) const;
};

/// Ordered, named pass/fail flags.
class ClaimChecks {
 public:
  void set(const std::string& name, bool ok, std::string detail = {});
  void merge(const ClaimChecks& other);
  std::optional<bool> get(const std::string& name) const;
  bool all_passed() const;
  std::vector<std::string> failed() const;

  struct Entry {
    std::string name;
    bool ok = true;
    std::string detail;
  };
  const std::vector<Entry>& entries() const noexcept { return entries_; }

 private:
  std::vector<Entry> entries_;
};

/// Throw: the first failed check raises ClaimViolation. Record: failures are
/// flagged and the construction continues as far as it can.
enum class ClaimPolicy { Throw, Record };

/// Requires g bipartite (NotBipartite), m odd (EvenExponent), c a hole of
/// G^[m] (HoleNotInduced) with at least 6 vertices (HoleTooShort).
/// PathTooLong signals a shortest path longer than m.
PathSystem build_path_system(const Graph& g, int m, const Hole& c);

/// s in [0, p) with owner(y) = owner(x) + s (mod p).
int clock_dist(const PathSystem& sys, Vertex x, Vertex y);

/// y <_x z: scanning clockwise from x, y comes before z.
bool before(const PathSystem& sys, Vertex x, Vertex y, Vertex z);

/// The neighbour y of x on Q_i, Q_{i+1} or Q_{i+2} (x on Q_i) with y <_x z
/// that comes last in the clockwise scan from x. Absent when x ~ z and z
/// itself lies on one of those three paths.
std::optional<Vertex> farthest_neighbor_before(const PathSystem& sys, Vertex x, Vertex z);

/// min(clock_dist(x, y), clock_dist(y, x)) for an edge of H'.
int edge_level(const PathSystem& sys, Vertex x, Vertex y);

struct EdgeLevel {
  int level = 0;
  /// Oriented so that clock_dist(edge.first, edge.second) == level.
  Edge edge{-1, -1};
};

/// Largest edge level of H' and the canonical edge attaining it: smallest
/// owner of the oriented start vertex, then smallest circle position.
/// Throws ClaimViolation("claim1") unless 1 <= level <= 2.
EdgeLevel max_edge_level(const PathSystem& sys);

struct CycleSearch {
  /// C' = z_0 ... z_q as vertices of H'.
  Hole cycle;
  EdgeLevel level;
  /// Path index relabelled as Q_0.
  int base_index = 0;
  /// Iterations of the closing while-loop.
  int iterations = 0;
  /// claim1 .. claim4, plus "length" (|C'| >= p) and "parity" (|C'| even).
  ClaimChecks checks;
};

/// The cycle-finding walk on H': pick the canonical maximum-level edge,
/// take z_0 as the first vertex of Q_0 with such an edge into Q_l, z_1 as the
/// last neighbour of z_0 on Q_l, then follow farthest neighbours before z_0
/// until the walk closes on a neighbour of z_0. A walk that cannot continue
/// raises ClaimViolation under either policy.
CycleSearch find_cycle(const PathSystem& sys, ClaimPolicy policy = ClaimPolicy::Throw);

/// Statements about C' against the Q_i, evaluated literally:
///   claim5: every pair Q_j, Q_{j+1} meets C';
///   claim6: between any two 2-edges of C', both arcs of C' hold a 0-edge;
///   claim7: for any two Q_j, Q_j' missing C', each of the two arcs of paths
///           they cut the circle into contains a Q_i meeting C' twice.
ClaimChecks verify_claims(const PathSystem& sys, const Hole& c_prime);

/// Structural facts about H': "observation1" (bipartite), "arrangement"
/// (circle neighbours adjacent), "path-system" (lengths, disjointness,
/// parity of p) and "nonadjacency-gap" (copies of non-consecutive, opposite
/// side hole vertices are at distance >= m + 2 in H').
ClaimChecks verify_path_system(const PathSystem& sys);

struct WitnessReport {
  Hole input_hole;
  Hole cycle_prime;
  Hole pulled_back_hole;
  int max_edge_level = 0;
  int iteration_count = 0;
  ClaimChecks claim_checks;
};

/// Pulls a hole c of G^[m] with |c| >= 6 back to a hole of G at least as
/// long. The final "pullback" check re-verifies the result against g with
/// is_induced_cycle().
WitnessReport pullback_hole(const Graph& g, int m, const Hole& c, ClaimPolicy policy = ClaimPolicy::Throw);

/// Graphviz drawing of H' with vertices pinned on the circular arrangement
/// and C' highlighted. Labels read "<G vertex>:Q<i>".
std::string write_arrangement_dot(const PathSystem& sys, const Hole& c_prime);

}  // namespace bipow
