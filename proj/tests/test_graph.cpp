#include <doctest.h>

#include "bipow/graph.hpp"
#include "test_support.hpp"

using namespace bipow;
using namespace bipow::testing;

TEST_CASE("graph construction keeps the invariants") {
  Graph g(4);
  CHECK(g.add_edge(0, 1));
  CHECK_FALSE(g.add_edge(1, 0));
  CHECK(g.size() == 1);
  CHECK(g.has_edge(1, 0));
  CHECK_THROWS_AS(g.add_edge(2, 2), GraphError);
  CHECK_THROWS_AS(g.add_edge(0, 4), IndexOutOfRange);
  CHECK_FALSE(g.has_edge(0, 7));

  g.add_edge(3, 0);
  g.add_edge(2, 0);
  const auto nb = g.neighbors(0);
  CHECK(std::vector<Vertex>(nb.begin(), nb.end()) == std::vector<Vertex>{1, 2, 3});
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}});
}

TEST_CASE("distance_matrix examples") {
  const auto path = gen_path(4);
  const DistanceMatrix d = distance_matrix(path);
  CHECK(d(0, 3) == 3);
  CHECK(distance_matrix(cycle_graph(6))(0, 3) == 3);
  for (Vertex v = 0; v < 4; ++v) CHECK(d(v, v) == 0);

  Graph split(3);
  split.add_edge(0, 1);
  CHECK(distance_matrix(split)(0, 2) == kUnreachable);
  CHECK(distance_matrix(Graph(0)).size() == 0);
}

TEST_CASE("distance_matrix agrees with Floyd-Warshall and is a metric") {
  for (const Graph& g : random_corpus(101, 60, 1, 12)) {
    const DistanceMatrix d = distance_matrix(g);
    const auto fw = floyd_warshall(g);
    const int n = g.order();
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = 0; v < n; ++v) {
        const int expect = fw[u][v] >= (1 << 28) ? kUnreachable : fw[u][v];
        REQUIRE(d(u, v) == expect);
        CHECK(d(u, v) == d(v, u));
        CHECK((d(u, v) == 1) == g.has_edge(u, v));
        for (Vertex w = 0; w < n; ++w) {
          if (d(u, w) != kUnreachable && d(w, v) != kUnreachable) CHECK(d(u, v) <= d(u, w) + d(w, v));
        }
      }
    }
  }
}

TEST_CASE("bipartition examples") {
  const Bipartition c6 = bipartition(cycle_graph(6));
  CHECK(c6.side_a == std::vector<Vertex>{0, 2, 4});
  CHECK(c6.side_b == std::vector<Vertex>{1, 3, 5});

  const Bipartition empty = bipartition(Graph(3));
  CHECK(empty.side_a == std::vector<Vertex>{0, 1, 2});
  CHECK(empty.side_b.empty());

  try {
    bipartition(cycle_graph(3));
    FAIL("triangle is not bipartite");
  } catch (const OddCycle& e) {
    CHECK(e.cycle().size() == 3);
  }
}

TEST_CASE("odd cycle certificates are real odd cycles") {
  int seen = 0;
  for (const Graph& g : random_corpus(7, 80, 3, 12)) {
    try {
      const Bipartition part = bipartition(g);
      for (auto [u, v] : g.edges()) CHECK_FALSE(part.same_side(u, v));
      CHECK(part.side_a.size() + part.side_b.size() == static_cast<std::size_t>(g.order()));
    } catch (const OddCycle& e) {
      ++seen;
      const auto& cyc = e.cycle();
      REQUIRE(cyc.size() % 2 == 1);
      for (std::size_t i = 0; i < cyc.size(); ++i) CHECK(g.has_edge(cyc[i], cyc[(i + 1) % cyc.size()]));
      std::vector<Vertex> sorted = cyc;
      std::sort(sorted.begin(), sorted.end());
      CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
    }
  }
  CHECK(seen > 10);
}

TEST_CASE("bipartite distances have side parity") {
  for (const Graph& g : bipartite_corpus(3, 40, 2, 12)) {
    const Bipartition part = bipartition(g);
    const DistanceMatrix d = distance_matrix(g);
    for (Vertex u = 0; u < g.order(); ++u) {
      for (Vertex v = 0; v < g.order(); ++v) {
        if (d(u, v) == kUnreachable) continue;
        CHECK((d(u, v) % 2 == 0) == part.same_side(u, v));
      }
    }
  }
}

TEST_CASE("induced_subgraph examples") {
  const std::vector<Vertex> arc{0, 1, 2};
  const auto sub = induced_subgraph(cycle_graph(6), arc);
  CHECK(sub.graph == gen_path(3));
  CHECK(sub.to_parent == arc);

  const Graph k33 = gen_complete_bipartite(3, 3);
  const std::vector<Vertex> all{0, 1, 2, 3, 4, 5};
  const auto same = induced_subgraph(k33, all);
  CHECK(same.graph == k33);
  CHECK(same.to_parent == all);

  const std::vector<Vertex> side{3, 4, 5};
  const auto independent = induced_subgraph(k33, side);
  CHECK(independent.graph.order() == 3);
  CHECK(independent.graph.size() == 0);

  const std::vector<Vertex> bad{0, 9};
  CHECK_THROWS_AS(induced_subgraph(k33, bad), IndexOutOfRange);
}

TEST_CASE("is_induced_cycle examples") {
  const std::vector<Vertex> six{0, 1, 2, 3, 4, 5};
  CHECK(is_induced_cycle(cycle_graph(6), six));
  const std::vector<Vertex> four{0, 1, 2, 3};
  CHECK_FALSE(is_induced_cycle(complete_graph(4), four));

  // 8-vertex circulant with offsets {1, 3}: 0 ~ 5 since 5 = 0 - 3 (mod 8).
  const Graph circ = circulant(8, {1, 3});
  const std::vector<Vertex> seq{0, 1, 2, 5, 4, 7};
  CHECK(circ.has_edge(0, 5));
  CHECK_FALSE(naive_is_hole(circ, seq));
  CHECK_FALSE(is_induced_cycle(circ, seq));

  CHECK_FALSE(is_induced_cycle(cycle_graph(6), std::vector<Vertex>{0, 1}));
  CHECK_FALSE(is_induced_cycle(cycle_graph(6), std::vector<Vertex>{0, 1, 2, 3, 4, 5, 0}));
  CHECK_FALSE(is_induced_cycle(cycle_graph(6), std::vector<Vertex>{0, 1, 2, 3, 4, 9}));
}

TEST_CASE("is_induced_cycle agrees with the pairwise definition") {
  Rng rng(55);
  int positives = 0;
  for (const Graph& g : random_corpus(17, 200, 3, 10)) {
    for (int trial = 0; trial < 20; ++trial) {
      const int len = static_cast<int>(rng.uniform_int(2, g.order()));
      std::vector<Vertex> seq;
      // Random walks hit real cycles far more often than random sequences.
      seq.push_back(static_cast<Vertex>(rng.uniform_int(0, g.order() - 1)));
      while (static_cast<int>(seq.size()) < len) {
        const auto nb = g.neighbors(seq.back());
        if (nb.empty()) break;
        seq.push_back(nb[static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(nb.size()) - 1))]);
      }
      const bool expect = naive_is_hole(g, seq);
      positives += expect;
      REQUIRE(is_induced_cycle(g, seq) == expect);
    }
  }
  CHECK(positives > 20);
}

TEST_CASE("shortest_path examples") {
  CHECK(shortest_path(gen_path(3), 0, 2).vertices == std::vector<Vertex>{0, 1, 2});
  const Path trivial = shortest_path(gen_path(3), 1, 1);
  CHECK(trivial.vertices == std::vector<Vertex>{1});
  CHECK(trivial.length() == 0);
  // Both 0-1-2-3 and 0-5-4-3 are shortest; the lowest-index parent rule picks the first.
  CHECK(shortest_path(cycle_graph(6), 0, 3).vertices == std::vector<Vertex>{0, 1, 2, 3});

  Graph split(4);
  split.add_edge(0, 1);
  CHECK_THROWS_AS(shortest_path(split, 0, 3), Unreachable);
  CHECK_THROWS_AS(shortest_path(split, 0, 8), IndexOutOfRange);
}

TEST_CASE("shortest paths are geodesics") {
  for (const Graph& g : random_corpus(23, 50, 2, 12)) {
    const DistanceMatrix d = distance_matrix(g);
    for (Vertex u = 0; u < g.order(); ++u) {
      for (Vertex v = 0; v < g.order(); ++v) {
        if (d(u, v) == kUnreachable) continue;
        const Path p = shortest_path(g, u, v);
        REQUIRE(p.length() == d(u, v));
        CHECK(p.front() == u);
        CHECK(p.back() == v);
        for (int i = 0; i < p.length(); ++i) CHECK(g.has_edge(p.vertices[i], p.vertices[i + 1]));
        CHECK(shortest_path(g, u, v) == p);
      }
    }
  }
}

TEST_CASE("empty graph is legal") {
  const Graph g(0);
  CHECK(g.edges().empty());
  CHECK(bipartition(g).side_a.empty());
  CHECK(is_connected(g));
  CHECK_FALSE(is_induced_cycle(g, std::vector<Vertex>{}));
}
