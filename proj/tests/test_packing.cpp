#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "orelab/constructions.hpp"
#include "orelab/ore.hpp"
#include "orelab/packing.hpp"

using namespace orelab;

TEST_CASE("T of small named graphs") {
  CHECK(t_number(complete_graph(5)).value == 2);
  CHECK(t_number(complete_graph(5).without_edge(0, 1)).value == 2);
  CHECK(t_number(complete_graph(4)).value == 2);
  CHECK(t_number(cycle_graph(5)).value == 0);
  CHECK(t_number(disjoint_union(complete_graph(4), complete_graph(4))).value == 4);
  CHECK(t_number(complete_graph(7)).value == 3);
  CHECK(t_number(complete_graph(7)).value == oracle::t_number(complete_graph(7)));
  CHECK(t_number(Graph(0)).value == 0);
  CHECK(t_number(groetzsch_graph()).value == 0);
  CHECK(t_number(join(cycle_graph(5), complete_graph(2))).value == 2);
}

TEST_CASE("witness packings are valid and reach the value") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = oracle::random_graph(6 + trial % 8, 0.55, rng);
    const TNumber t = t_number(g);
    CHECK(is_valid_packing(g, t.witness));
    CHECK(t.witness.weight == t.value);
  }
}

TEST_CASE("packing validation rejects bad families") {
  const Graph g = complete_graph(6);
  CHECK(is_valid_packing(g, Packing{{VertexSet{0, 1, 2}, VertexSet{3, 4, 5}}, 2}));
  CHECK_FALSE(is_valid_packing(g, Packing{{VertexSet{0, 1, 2}, VertexSet{2, 3, 4}}, 2}));
  CHECK_FALSE(is_valid_packing(g, Packing{{VertexSet{0, 1, 2, 3}}, 1}));
  CHECK_FALSE(is_valid_packing(cycle_graph(6), Packing{{VertexSet{0, 1, 2}}, 1}));
  CHECK_FALSE(is_valid_packing(g, Packing{{VertexSet{0, 1}}, 0}));
}

TEST_CASE("clique pieces list K4s before triangles") {
  const auto pieces = clique_pieces(complete_graph(4));
  REQUIRE(pieces.size() == 5);
  CHECK(pieces[0] == VertexSet{0, 1, 2, 3});
  CHECK(pieces[1] == VertexSet{0, 1, 2});
  CHECK(pieces[4] == VertexSet{1, 2, 3});
}

TEST_CASE("branch and bound, subset DP and family recursion agree") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 3 + trial % 10;
    const Graph g = oracle::random_graph(n, 0.3 + 0.006 * trial, rng);
    const int fast = t_number(g).value;
    CHECK(fast == t_number_oracle(g));
    CHECK(fast == oracle::t_number(g));
  }
  CHECK(t_number_oracle(Graph(0)) == 0);
  CHECK(t_number_oracle(complete_graph(4)) == 2);
  CHECK_THROWS_AS(t_number_oracle(Graph(15)), std::invalid_argument);
}

TEST_CASE("mic against exhaustive independent sets") {
  CHECK(mic(complete_graph(5)).value == 4);
  const Graph k33 = join(Graph(3), Graph(3));
  CHECK(mic(k33).value == 9);
  const Graph gz = groetzsch_graph();
  CHECK(mic(gz).value == oracle::mic(gz));

  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = oracle::random_graph(4 + trial % 12, 0.3, rng);
    const MicWitness w = mic(g);
    CHECK(w.value == oracle::mic(g));
    CHECK(is_independent(g, w.independent_set));
    int sum = 0;
    for (int v : w.independent_set)
      sum += g.degree(v);
    CHECK(sum == w.value);
  }
}
