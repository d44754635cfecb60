#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "orelab/canon.hpp"
#include "orelab/constructions.hpp"
#include "orelab/graph_io.hpp"
#include "orelab/ore.hpp"

using namespace orelab;

TEST_CASE("canonical form is a relabelling of the input") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = oracle::random_graph(9, 0.45, rng);
    const CanonicalForm cf = canonical_form(g);
    CHECK(g.relabeled(cf.perm) == cf.graph);
    CHECK(cf.key.bytes == to_graph6(cf.graph));
  }
}

TEST_CASE("canonical key is invariant under shuffling") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 4 + trial % 20;
    const Graph g = oracle::random_graph(n, 0.3 + 0.01 * trial, rng);
    CHECK(canonical_key(g) == canonical_key(oracle::shuffled(g, rng)));
  }
  // Highly symmetric inputs stress the refinement search.
  for (const Graph &g : {groetzsch_graph(), mycielskian(groetzsch_graph()),
                         cycle_graph(17), complete_graph(12),
                         disjoint_union(cycle_graph(6), cycle_graph(6))})
    CHECK(canonical_key(g) == canonical_key(oracle::shuffled(g, rng)));
}

TEST_CASE("equal keys exactly when the permutation oracle says isomorphic") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 5 + trial % 3;
    const Graph a = oracle::random_graph(n, 0.5, rng);
    const Graph b = trial % 2 ? oracle::shuffled(a, rng) : oracle::random_graph(n, 0.5, rng);
    CHECK(isomorphic(a, b) == oracle::isomorphic(a, b));
  }
}

TEST_CASE("all graphs on 5 vertices fall into 34 classes") {
  // 34 is the number of unlabelled graphs on five vertices.
  std::set<CanonKey> keys;
  for (std::uint32_t mask = 0; mask < (1U << 10); ++mask) {
    GraphBuilder b(5);
    int bit = 0;
    for (int u = 0; u < 5; ++u)
      for (int v = u + 1; v < 5; ++v, ++bit)
        if (mask >> bit & 1U)
          b.add_edge(u, v);
    keys.insert(canonical_key(b.build()));
  }
  CHECK(keys.size() == 34);
}

TEST_CASE("short ids are stable and well formed") {
  const std::string id = canonical_key(complete_graph(5)).short_id();
  CHECK(id.size() == 17);
  CHECK(id[0] == 'g');
  CHECK(id == canonical_key(complete_graph(5)).short_id());
  CHECK(id != canonical_key(cycle_graph(5)).short_id());
}
