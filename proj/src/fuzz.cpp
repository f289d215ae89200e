#include "bipow/fuzz.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <ostream>
#include <sstream>

#include "bipow/chordality.hpp"
#include "bipow/generators.hpp"
#include "bipow/io.hpp"
#include "bipow/powers.hpp"
#include "bipow/rng.hpp"
#include "bipow/witness.hpp"

namespace bipow {
namespace {

constexpr std::pair<Property, std::string_view> kNames[] = {
    {Property::Theorem, "theorem"},
    {Property::TreeCorollary, "tree-corollary"},
    {Property::Witness, "witness"},
    {Property::Duchet, "duchet"},
    {Property::OracleEquivalence, "oracle-equivalence"},
};

std::string vertex_list(std::span<const Vertex> vs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < vs.size(); ++i) out << (i ? " " : "") << vs[i];
  return out.str();
}

Graph shuffled(const Graph& g, Rng& rng) {
  std::vector<Vertex> perm(static_cast<std::size_t>(g.order()));
  std::iota(perm.begin(), perm.end(), 0);
  rng.shuffle(std::span(perm));
  return relabel(g, perm);
}

CheckResult check_theorem(const Graph& g, std::span<const int> ms) {
  const int base = chordality(g);
  const int bound = std::max(4, base);
  for (int m : ms) {
    const Graph power = bipartite_power(g, m);
    if (exists_hole_longer_than(power, bound)) {
      return {Outcome::Fail, "m=" + std::to_string(m) + ": chordality(G^[m])=" + std::to_string(chordality(power)) +
                                 " exceeds max(4, chordality(G)=" + std::to_string(base) + ")"};
    }
  }
  return {};
}

CheckResult check_tree(const Graph& g, std::span<const int> ms) {
  if (static_cast<int>(g.size()) + 1 != g.order() || !is_connected(g)) return {Outcome::Fail, "input is not a tree"};
  for (int m : ms) {
    const Graph power = bipartite_power(g, m);
    if (!is_chordal_bipartite(power)) {
      return {Outcome::Fail, "m=" + std::to_string(m) + ": G^[m] has a hole of length " +
                                 std::to_string(chordality(power))};
    }
  }
  return {};
}

CheckResult check_witness(const Graph& g, std::span<const int> ms) {
  bool any = false;
  for (int m : ms) {
    const auto hole = largest_hole(bipartite_power(g, m));
    if (!hole || hole->length() < 6) continue;
    any = true;
    const std::string where = "m=" + std::to_string(m) + ", hole " + vertex_list(hole->vertices) + ": ";
    try {
      const WitnessReport report = pullback_hole(g, m, *hole, ClaimPolicy::Throw);
      // Checked again here, away from the construction.
      if (!is_induced_cycle(g, report.pulled_back_hole.vertices)) {
        return {Outcome::Fail, where + "pulled-back cycle " + vertex_list(report.pulled_back_hole.vertices) +
                                   " is not a hole of G"};
      }
      if (report.pulled_back_hole.length() < hole->length()) {
        return {Outcome::Fail, where + "pulled-back hole is shorter than the input hole"};
      }
      if (!report.claim_checks.all_passed()) return {Outcome::Fail, where + "claim check failed"};
    } catch (const GraphError& e) {
      return {Outcome::Fail, where + e.what()};
    }
  }
  if (!any) return {Outcome::Skip, "no hole of length >= 6 in any requested bipartite power"};
  return {};
}

CheckResult check_duchet(const Graph& g, std::span<const int> ms) {
  for (int m : ms) {
    const int lower = chordality(graph_power(g, m));
    const Graph next = graph_power(g, m + 2);
    if (exists_hole_longer_than(next, std::max(3, lower))) {
      return {Outcome::Fail, "m=" + std::to_string(m) + ": chordality(G^(m+2))=" + std::to_string(chordality(next)) +
                                 " exceeds max(3, chordality(G^m)=" + std::to_string(lower) + ")"};
    }
  }
  return {};
}

CheckResult check_oracle(const Graph& g) {
  const auto hole = largest_hole(g);
  const int fast = hole ? hole->length() : 0;
  const int slow = chordality_oracle(g);
  if (fast != slow) {
    return {Outcome::Fail, "DFS search says " + std::to_string(fast) + ", subset oracle says " + std::to_string(slow)};
  }
  if (hole && !is_induced_cycle(g, hole->vertices)) return {Outcome::Fail, "returned hole is not induced"};
  return {};
}

}  // namespace

std::optional<Property> parse_property(std::string_view name) {
  for (auto [p, n] : kNames) {
    if (n == name) return p;
  }
  return std::nullopt;
}

std::string_view property_name(Property property) {
  for (auto [p, n] : kNames) {
    if (p == property) return n;
  }
  return "unknown";
}

void TrialConfig::validate() const {
  if (trials < 1) throw GraphError("trials must be >= 1");
  if (max_n < 4) throw GraphError("max-n must be >= 4");
  if (m_values.empty()) throw GraphError("at least one m value is required");
  for (int m : m_values) {
    if (m < 1 || m % 2 == 0) throw GraphError("m values must be odd and >= 1, got " + std::to_string(m));
  }
}

CheckResult check_property(Property property, const Graph& g, std::span<const int> m_values) {
  switch (property) {
    case Property::Theorem:
      return check_theorem(g, m_values);
    case Property::TreeCorollary:
      return check_tree(g, m_values);
    case Property::Witness:
      return check_witness(g, m_values);
    case Property::Duchet:
      return check_duchet(g, m_values);
    case Property::OracleEquivalence:
      return check_oracle(g);
  }
  return {Outcome::Fail, "unknown property"};
}

Graph generate_trial_graph(const TrialConfig& cfg, int index) {
  Rng rng(derive_seed(cfg.seed, static_cast<std::uint64_t>(index)));
  const int max_n = cfg.max_n;
  switch (cfg.property) {
    case Property::Theorem: {
      const int n = static_cast<int>(rng.uniform_int(4, max_n));
      const int n_a = static_cast<int>(rng.uniform_int(1, n - 1));
      const double prob = 0.02 + 0.58 * rng.uniform01();
      const bool connect = rng.bernoulli(0.5);
      const Graph g = gen_random_bipartite(n_a, n - n_a, prob, rng.next(), connect);
      return shuffled(g, rng);
    }
    case Property::TreeCorollary: {
      const int n = static_cast<int>(rng.uniform_int(4, max_n));
      return gen_random_tree(n, rng.next());
    }
    case Property::Witness: {
      // Long holes in G^[m] need long holes in G: sparse, connected, near max_n.
      const int n = static_cast<int>(rng.uniform_int(std::max(4, max_n - 2), max_n));
      const int n_a = static_cast<int>(rng.uniform_int(std::max(1, n / 2 - 1), std::min(n - 1, n / 2 + 1)));
      const double prob = 0.03 + 0.06 * rng.uniform01();
      const Graph g = gen_random_bipartite(n_a, n - n_a, prob, rng.next(), true);
      return shuffled(g, rng);
    }
    case Property::Duchet: {
      const int n = static_cast<int>(rng.uniform_int(4, max_n));
      const double prob = 0.1 + 0.5 * rng.uniform01();
      return gen_random_graph(n, prob, rng.next());
    }
    case Property::OracleEquivalence: {
      const int n = static_cast<int>(rng.uniform_int(1, std::min(max_n, kOracleDefaultCap)));
      const double prob = 0.1 + 0.8 * rng.uniform01();
      return gen_random_graph(n, prob, rng.next());
    }
  }
  throw GraphError("unknown property");
}

FuzzReport run_property(const TrialConfig& cfg) {
  cfg.validate();
  const auto start = std::chrono::steady_clock::now();
  FuzzReport report;
  report.property = cfg.property;
  for (int i = 0; i < cfg.trials; ++i) {
    const Graph g = generate_trial_graph(cfg, i);
    CheckResult result;
    try {
      result = check_property(cfg.property, g, cfg.m_values);
    } catch (const GraphError& e) {
      result = {Outcome::Fail, std::string("unexpected error: ") + e.what()};
    }
    ++report.trials_run;
    if (result.outcome == Outcome::Skip) ++report.skipped;
    if (result.outcome == Outcome::Fail) {
      report.failures.push_back({i, cfg.property, write_edge_list(g), result.detail});
    }
  }
  std::sort(report.failures.begin(), report.failures.end(),
            [](const FuzzFailure& a, const FuzzFailure& b) { return a.trial < b.trial; });
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

void write_report(std::ostream& out, const TrialConfig& cfg, const FuzzReport& report) {
  out << "property: " << property_name(cfg.property) << '\n';
  out << "seed: " << cfg.seed << '\n';
  out << "trials: " << cfg.trials << '\n';
  out << "max-n: " << cfg.max_n << '\n';
  out << "m:";
  for (std::size_t i = 0; i < cfg.m_values.size(); ++i) out << (i ? "," : " ") << cfg.m_values[i];
  out << '\n';
  out << "trials-run: " << report.trials_run << '\n';
  out << "checked: " << report.checked() << '\n';
  out << "skipped: " << report.skipped << '\n';
  out << "failures: " << report.failures.size() << '\n';
  for (const auto& f : report.failures) {
    out << "--- failure trial=" << f.trial << " property=" << property_name(f.property) << '\n';
    out << "detail: " << f.detail << '\n';
    out << f.graph;
    out << "---\n";
  }
  out << "result: " << (report.ok() ? "PASS" : "FAIL") << '\n';
  out << "elapsed-ms: " << static_cast<long long>(report.elapsed_ms) << '\n';
}

}  // namespace bipow
