#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "bipow/cli.hpp"
#include "bipow/io.hpp"
#include "test_support.hpp"

using namespace bipow;
using namespace bipow::testing;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args, const std::string& stdin_text = {}) {
  std::istringstream in(stdin_text);
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("bipow_test_" + name);
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream f(path);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

bool has_line(const std::string& text, const std::string& line) {
  return ("\n" + text).find("\n" + line + "\n") != std::string::npos;
}

}  // namespace

TEST_CASE("power command") {
  const std::string p4 = write_edge_list(gen_path(4));
  const Run r = run({"power", "--input", "-", "--m", "3", "--bipartite"}, p4);
  CHECK(r.code == kExitOk);
  CHECK(read_edge_list(r.out) == cycle_graph(4));

  const Run plain = run({"power", "--input", "-", "--m", "2"}, p4);
  CHECK(plain.code == kExitOk);
  CHECK(read_edge_list(plain.out).size() == 5);

  const auto file = temp_path("power.txt");
  CHECK(run({"power", "--input", "-", "--m", "1", "--output", file.string()}, p4).code == kExitOk);
  CHECK(slurp(file) == p4);
  std::filesystem::remove(file);

  CHECK(run({"power", "--input", "-", "--m", "2", "--bipartite"}, p4).code == kExitUsage);
  CHECK(run({"power", "--input", "-", "--m", "3", "--bipartite"}, write_edge_list(cycle_graph(5))).code ==
        kExitUsage);
  CHECK(run({"power", "--input", "/nonexistent/graph.txt", "--m", "1"}).code == kExitUsage);
  CHECK(run({"power", "--input", "-", "--m", "1"}, "n 2\n0 0\n").code == kExitUsage);
}

TEST_CASE("chordality command") {
  const std::string c6 = write_edge_list(cycle_graph(6));
  const Run r = run({"chordality", "--input", "-"}, c6);
  CHECK(r.code == kExitOk);
  CHECK(r.out == "chordality=6\nhole=0 1 2 3 4 5\n");

  const Run k = run({"chordality", "--input", "-", "--k", "4"}, c6);
  CHECK(has_line(k.out, "k-chordal=false"));
  CHECK(has_line(run({"chordality", "--input", "-", "--k", "6"}, c6).out, "k-chordal=true"));
  CHECK(run({"chordality", "--input", "-", "--k", "2"}, c6).code == kExitUsage);

  const Run tree = run({"chordality", "--input", "-"}, write_edge_list(gen_path(4)));
  CHECK(tree.out == "chordality=0\nhole=none\n");

  const auto dot = temp_path("chord.dot");
  CHECK(run({"chordality", "--input", "-", "--dot", dot.string()}, c6).code == kExitOk);
  CHECK(slurp(dot).find("color=red") != std::string::npos);
  std::filesystem::remove(dot);
}

TEST_CASE("witness command") {
  const Run r = run({"witness", "--input", "-", "--m", "1"}, write_edge_list(cycle_graph(6)));
  CHECK(r.code == kExitOk);
  CHECK(has_line(r.out, "input-length=6"));
  CHECK(has_line(r.out, "pulled-back-length=6"));
  CHECK(has_line(r.out, "pullback=pass"));
  CHECK(has_line(r.out, "witness=verified"));

  const Run big = run({"witness", "--input", "-", "--m", "3", "--strict"}, write_edge_list(gen_even_cycle(14)));
  CHECK(big.code == kExitOk);
  CHECK(has_line(big.out, "input-length=8"));
  CHECK(has_line(big.out, "pulled-back-length=14"));

  const Run skip = run({"witness", "--input", "-", "--m", "3"}, write_edge_list(gen_path(6)));
  CHECK(skip.code == kExitOk);
  CHECK(skip.out.find("witness=skipped") != std::string::npos);

  CHECK(run({"witness", "--input", "-", "--m", "2"}, write_edge_list(cycle_graph(6))).code == kExitUsage);
  CHECK(run({"witness", "--input", "-", "--m", "1"}, write_edge_list(cycle_graph(7))).code == kExitUsage);

  const auto dot = temp_path("witness.dot");
  CHECK(run({"witness", "--input", "-", "--m", "1", "--dot", dot.string()}, write_edge_list(cycle_graph(6))).code ==
        kExitOk);
  CHECK(slurp(dot).find(":Q0") != std::string::npos);
  std::filesystem::remove(dot);
}

TEST_CASE("fuzz command") {
  const std::vector<std::string> args{"fuzz",   "--property", "theorem", "--trials", "30",
                                      "--seed", "4",          "--max-n", "10",       "--m", "3,5"};
  const Run a = run(args);
  CHECK(a.code == kExitOk);
  CHECK(has_line(a.out, "result: PASS"));
  CHECK(has_line(a.out, "m: 3,5"));
  const Run b = run(args);
  CHECK(a.out.substr(0, a.out.rfind("elapsed-ms:")) == b.out.substr(0, b.out.rfind("elapsed-ms:")));

  CHECK(run({"fuzz", "--property", "bogus", "--trials", "3", "--seed", "1", "--max-n", "8"}).code == kExitUsage);
  CHECK(run({"fuzz", "--property", "theorem", "--trials", "3", "--seed", "1", "--max-n", "8", "--m", "2"}).code ==
        kExitUsage);
  CHECK(run({"fuzz", "--property", "theorem"}).code == kExitUsage);
}

TEST_CASE("replay command") {
  const Run pass = run({"replay", "--property", "witness", "--input", "-", "--m", "1"},
                       write_edge_list(cycle_graph(6)));
  CHECK(pass.code == kExitOk);
  CHECK(has_line(pass.out, "outcome=pass"));

  const Run fail = run({"replay", "--property", "tree-corollary", "--input", "-", "--m", "3"},
                       write_edge_list(cycle_graph(6)));
  CHECK(fail.code == kExitFailure);
  CHECK(has_line(fail.out, "outcome=fail"));
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitOk);
  CHECK(run({"power", "--input", "-"}).code == kExitUsage);
}
