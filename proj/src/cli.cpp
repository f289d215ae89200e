#include "bipow/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "bipow/chordality.hpp"
#include "bipow/fuzz.hpp"
#include "bipow/io.hpp"
#include "bipow/powers.hpp"
#include "bipow/witness.hpp"

namespace bipow {
namespace {

// Input failures map to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Graph load_graph(const std::string& path, std::istream& in) {
  if (path == "-") return read_edge_list(in);
  std::ifstream file(path);
  if (!file) throw UsageError("cannot open " + path);
  return read_edge_list(file);
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw UsageError("cannot write " + path);
  file << text;
}

std::string join(std::span<const Vertex> vs) {
  std::ostringstream s;
  for (std::size_t i = 0; i < vs.size(); ++i) s << (i ? " " : "") << vs[i];
  return s.str();
}

struct PowerArgs {
  std::string input;
  int m = 1;
  bool bipartite = false;
  std::string output = "-";
};

int cmd_power(const PowerArgs& a, std::istream& in, std::ostream& out) {
  const Graph g = load_graph(a.input, in);
  const Graph p = a.bipartite ? bipartite_power(g, a.m) : graph_power(g, a.m);
  emit(a.output, write_edge_list(p), out);
  return kExitOk;
}

struct ChordalityArgs {
  std::string input;
  std::optional<int> k;
  std::string dot;
};

int cmd_chordality(const ChordalityArgs& a, std::istream& in, std::ostream& out) {
  const Graph g = load_graph(a.input, in);
  const auto hole = largest_hole(g);
  out << "chordality=" << (hole ? hole->length() : 0) << '\n';
  out << "hole=" << (hole ? join(hole->vertices) : "none") << '\n';
  if (a.k) {
    if (*a.k < 3) throw UsageError("--k must be >= 3");
    out << "k-chordal=" << (is_k_chordal(g, *a.k) ? "true" : "false") << '\n';
  }
  if (!a.dot.empty()) {
    const std::vector<Vertex> none;
    emit(a.dot, write_dot(g, hole ? hole->vertices : none), out);
  }
  return kExitOk;
}

struct WitnessArgs {
  std::string input;
  int m = 1;
  std::string dot;
  bool strict = false;
};

int cmd_witness(const WitnessArgs& a, std::istream& in, std::ostream& out) {
  const Graph g = load_graph(a.input, in);
  const Graph power = bipartite_power(g, a.m);
  const auto hole = largest_hole(power);
  const int p = hole ? hole->length() : 0;
  out << "input-hole=" << (hole ? join(hole->vertices) : "none") << '\n';
  out << "input-length=" << p << '\n';
  if (p < 6) {
    out << "witness=skipped (largest hole of G^[" << a.m << "] has fewer than 6 vertices)\n";
    return kExitOk;
  }

  const PathSystem sys = build_path_system(g, a.m, *hole);
  WitnessReport report;
  try {
    report = pullback_hole(g, a.m, *hole, a.strict ? ClaimPolicy::Throw : ClaimPolicy::Record);
  } catch (const ClaimViolation& e) {
    out << "witness=aborted\n" << e.claim() << "=FAIL " << e.what() << '\n';
    return kExitFailure;
  }

  out << "cycle-prime=";
  for (std::size_t i = 0; i < report.cycle_prime.vertices.size(); ++i) {
    const Vertex x = report.cycle_prime.vertices[i];
    out << (i ? " " : "") << sys.h_to_g[sys.expansion.copy_to_base[x]] << ":Q" << sys.owner[x];
  }
  out << '\n';
  out << "cycle-prime-length=" << report.cycle_prime.length() << '\n';
  out << "pulled-back-hole=" << join(report.pulled_back_hole.vertices) << '\n';
  out << "pulled-back-length=" << report.pulled_back_hole.length() << '\n';
  out << "max-edge-level=" << report.max_edge_level << '\n';
  out << "iterations=" << report.iteration_count << '\n';
  for (const auto& e : report.claim_checks.entries()) {
    out << e.name << '=' << (e.ok ? "pass" : "FAIL");
    if (!e.ok && !e.detail.empty()) out << " (" << e.detail << ')';
    out << '\n';
  }
  if (!a.dot.empty()) emit(a.dot, write_arrangement_dot(sys, report.cycle_prime), out);

  const bool verified = report.claim_checks.get("pullback").value_or(false);
  out << "witness=" << (report.claim_checks.all_passed() ? "verified" : verified ? "flagged" : "failed") << '\n';
  if (!verified) return kExitFailure;
  if (a.strict && !report.claim_checks.all_passed()) return kExitFailure;
  return kExitOk;
}

struct FuzzArgs {
  std::string property;
  int trials = 1;
  std::uint64_t seed = 0;
  int max_n = 10;
  std::vector<int> m{3};
};

TrialConfig make_config(const std::string& property, int trials, std::uint64_t seed, int max_n, std::vector<int> m) {
  const auto prop = parse_property(property);
  if (!prop) throw UsageError("unknown property '" + property + "'");
  TrialConfig cfg{seed, trials, max_n, std::move(m), *prop};
  try {
    cfg.validate();
  } catch (const GraphError& e) {
    throw UsageError(e.what());
  }
  return cfg;
}

int cmd_fuzz(const FuzzArgs& a, std::ostream& out) {
  const TrialConfig cfg = make_config(a.property, a.trials, a.seed, a.max_n, a.m);
  const FuzzReport report = run_property(cfg);
  write_report(out, cfg, report);
  return report.ok() ? kExitOk : kExitFailure;
}

struct ReplayArgs {
  std::string property;
  std::string input;
  std::vector<int> m{3};
};

int cmd_replay(const ReplayArgs& a, std::istream& in, std::ostream& out) {
  const TrialConfig cfg = make_config(a.property, 1, 0, 4, a.m);
  const Graph g = load_graph(a.input, in);
  const CheckResult r = check_property(cfg.property, g, cfg.m_values);
  static constexpr const char* kOutcome[] = {"pass", "skip", "fail"};
  out << "outcome=" << kOutcome[static_cast<int>(r.outcome)] << '\n';
  if (!r.detail.empty()) out << "detail=" << r.detail << '\n';
  return r.outcome == Outcome::Fail ? kExitFailure : kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bipartite graph powers, exact chordality and hole pullback", "bipow"};
  app.require_subcommand(1);

  PowerArgs power_args;
  auto* power = app.add_subcommand("power", "Write the m-th (bipartite) power as an edge list");
  power->add_option("--input", power_args.input, "Edge-list file, '-' for stdin")->required();
  power->add_option("--m", power_args.m, "Exponent")->required();
  power->add_flag("--bipartite", power_args.bipartite, "Bipartite power G^[m] instead of G^m");
  power->add_option("--output", power_args.output, "Output file, '-' for stdout");

  ChordalityArgs chord_args;
  auto* chord = app.add_subcommand("chordality", "Print the chordality and one largest hole");
  chord->add_option("--input", chord_args.input, "Edge-list file, '-' for stdin")->required();
  chord->add_option("--k", chord_args.k, "Also decide k-chordality");
  chord->add_option("--dot", chord_args.dot, "Write a DOT rendering with the hole highlighted");

  WitnessArgs witness_args;
  auto* witness = app.add_subcommand("witness", "Pull the largest hole of G^[m] back to a hole of G");
  witness->add_option("--input", witness_args.input, "Edge-list file, '-' for stdin")->required();
  witness->add_option("--m", witness_args.m, "Odd exponent")->required();
  witness->add_option("--dot", witness_args.dot, "Write H' on its circular arrangement as DOT");
  witness->add_flag("--strict", witness_args.strict, "Exit nonzero on any failed claim check");

  FuzzArgs fuzz_args;
  auto* fuzz = app.add_subcommand("fuzz", "Property-test a theorem statement on random graphs");
  fuzz->add_option("--property", fuzz_args.property,
                   "theorem | tree-corollary | witness | duchet | oracle-equivalence")
      ->required();
  fuzz->add_option("--trials", fuzz_args.trials, "Number of trials")->required();
  fuzz->add_option("--seed", fuzz_args.seed, "Base seed")->required();
  fuzz->add_option("--max-n", fuzz_args.max_n, "Vertex cap")->required();
  fuzz->add_option("--m", fuzz_args.m, "Comma-separated odd exponents")->delimiter(',');

  ReplayArgs replay_args;
  auto* replay = app.add_subcommand("replay", "Re-check one property on a saved graph");
  replay->add_option("--property", replay_args.property, "Property name")->required();
  replay->add_option("--input", replay_args.input, "Edge-list file, '-' for stdin")->required();
  replay->add_option("--m", replay_args.m, "Comma-separated odd exponents")->delimiter(',');

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (power->parsed()) return cmd_power(power_args, in, out);
    if (chord->parsed()) return cmd_chordality(chord_args, in, out);
    if (witness->parsed()) return cmd_witness(witness_args, in, out);
    if (fuzz->parsed()) return cmd_fuzz(fuzz_args, out);
    if (replay->parsed()) return cmd_replay(replay_args, in, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ClaimViolation& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const GraphError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace bipow
