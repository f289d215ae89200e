#include <doctest.h>

#include <sstream>

#include "bipow/io.hpp"
#include "test_support.hpp"

using namespace bipow;
using namespace bipow::testing;

TEST_CASE("read_edge_list parses comments, blanks and duplicates") {
  const Graph g = read_edge_list(
      "# a 4-cycle\n"
      "\n"
      "n 4\n"
      "0 1\n"
      "  1\t2 \n"
      "# interior comment\n"
      "2 3\n"
      "3 0\n"
      "1 0\n");
  CHECK(g == cycle_graph(4));
  CHECK(g.size() == 4);
}

TEST_CASE("read_edge_list reports the failing line") {
  auto line_of = [](const char* text) {
    try {
      read_edge_list(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(line_of("n 3\n0 1\n1 1\n") == 3);
  CHECK(line_of("# c\nn 3\n0 3\n") == 3);
  CHECK(line_of("n 3\n0 x\n") == 2);
  CHECK(line_of("n 3\n0 1 2\n") == 2);
  CHECK(line_of("m 3\n") == 1);
  CHECK(line_of("n -1\n") == 1);
  CHECK(line_of("# nothing\n") == 1);
  CHECK(line_of("0 1\n") == 1);
}

TEST_CASE("write_edge_list format") {
  Graph g(3);
  g.add_edge(2, 0);
  g.add_edge(1, 2);
  CHECK(write_edge_list(g) == "n 3\n0 2\n1 2\n");
  CHECK(write_edge_list(Graph(0)) == "n 0\n");
}

TEST_CASE("edge lists round-trip") {
  for (const Graph& g : random_corpus(91, 100, 0, 15)) {
    CHECK(read_edge_list(write_edge_list(g)) == g);
  }
}

TEST_CASE("write_dot highlights the cycle") {
  const Graph g = cycle_graph(4);
  const std::vector<Vertex> hole{0, 1, 2, 3};
  const std::string dot = write_dot(g, hole);
  CHECK(dot.rfind("graph G {", 0) == 0);
  CHECK(dot.find("0 -- 3 [color=red") != std::string::npos);
  CHECK(dot.find("2 -- 3 [color=red") != std::string::npos);
  CHECK(dot.find("3 [style=filled") != std::string::npos);

  const std::string plain = write_dot(g);
  CHECK(plain.find("color=red") == std::string::npos);
  CHECK(plain.find("0 -- 1;") != std::string::npos);
}
