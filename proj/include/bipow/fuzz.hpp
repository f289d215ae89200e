#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bipow/graph.hpp"

namespace bipow {

enum class Property { Theorem, TreeCorollary, Witness, Duchet, OracleEquivalence };

/// "theorem", "tree-corollary", "witness", "duchet", "oracle-equivalence".
std::optional<Property> parse_property(std::string_view name);
std::string_view property_name(Property property);

struct TrialConfig {
  std::uint64_t seed = 0;
  int trials = 1;
  int max_n = 10;
  std::vector<int> m_values{3};
  Property property = Property::Theorem;

  /// Throws GraphError unless trials >= 1, max_n >= 4 and every m is odd and >= 1.
  void validate() const;
};

enum class Outcome { Pass, Skip, Fail };

struct CheckResult {
  Outcome outcome = Outcome::Pass;
  std::string detail;
};

/// Evaluates one property on one graph. This is both the per-trial check and
/// the replay entry point, so a failure needs nothing but its graph.
///
///   theorem            chordality(G^[m]) <= max(4, chordality(G))
///   tree-corollary     G^[m] is chordal bipartite (G a tree)
///   witness            the largest hole of G^[m], if it has >= 6 vertices,
///                      pulls back to an independently verified hole of G at
///                      least as long with every claim check passing
///   duchet             chordality(G^(m+2)) <= max(3, chordality(G^m))
///   oracle-equivalence DFS search and subset oracle agree (m unused)
CheckResult check_property(Property property, const Graph& g, std::span<const int> m_values);

/// The graph used by trial `index`; depends on (cfg.seed, index, cfg.max_n,
/// cfg.property) only.
Graph generate_trial_graph(const TrialConfig& cfg, int index);

struct FuzzFailure {
  int trial = 0;
  Property property = Property::Theorem;
  /// Edge-list serialization of the failing graph.
  std::string graph;
  std::string detail;
};

struct FuzzReport {
  Property property = Property::Theorem;
  int trials_run = 0;
  int skipped = 0;
  /// Sorted by trial index.
  std::vector<FuzzFailure> failures;
  double elapsed_ms = 0.0;

  int checked() const noexcept { return trials_run - skipped; }
  bool ok() const noexcept { return failures.empty(); }
};

/// Runs cfg.trials independent trials; trial i draws from derive_seed(cfg.seed, i).
FuzzReport run_property(const TrialConfig& cfg);

/// Text summary. Every line except the final "elapsed-ms:" one is a pure
/// function of cfg.
void write_report(std::ostream& out, const TrialConfig& cfg, const FuzzReport& report);

}  // namespace bipow
