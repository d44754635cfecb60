#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "orelab/canon.hpp"
#include "orelab/coloring.hpp"
#include "orelab/constructions.hpp"
#include "orelab/discharge.hpp"
#include "orelab/ore.hpp"
#include "orelab/packing.hpp"
#include "orelab/potential.hpp"

using namespace orelab;

namespace {

const std::vector<OreClass> &ore_upto_13() {
  static const std::vector<OreClass> all = enumerate_5_ore(13);
  return all;
}

VertexSet random_subset(int n, int size, std::mt19937_64 &rng) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i)
    perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  VertexSet s;
  for (int i = 0; i < size; ++i)
    s.insert(perm[i]);
  return s;
}

std::vector<Graph> critical_sample() {
  std::vector<Graph> out;
  for (const OreClass &c : ore_upto_13())
    out.push_back(c.graph);
  out.push_back(*named_graph("c5_join_k2"));
  out.push_back(*named_graph("k1_join_groetzsch"));
  return out;
}

} // namespace

TEST_CASE("T is monotone under deletion and superadditive over disjoint unions") {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 80; ++trial) {
    const Graph g = oracle::random_graph(5 + trial % 8, 0.5, rng);
    const int t = t_number(g).value;
    for (const Edge &e : g.edges())
      CHECK(t_number(g.without_edge(e.u, e.v)).value <= t);
    const int v = static_cast<int>(rng() % g.order());
    CHECK(t_number(delete_vertex(g, v).graph).value <= t);
    const Graph h = oracle::random_graph(4 + trial % 5, 0.6, rng);
    CHECK(t_number(disjoint_union(g, h)).value >= t + t_number(h).value);
  }
}

TEST_CASE("T is an isomorphism invariant with valid witnesses") {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = oracle::random_graph(6 + trial % 10, 0.5, rng);
    const TNumber a = t_number(g);
    const Graph h = oracle::shuffled(g, rng);
    const TNumber b = t_number(h);
    CHECK(a.value == b.value);
    CHECK(is_valid_packing(h, b.witness));
  }
}

TEST_CASE("potentials of induced subgraphs are exact in twenty-firsts") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = oracle::random_graph(5 + trial % 9, 0.45, rng);
    const VertexSet r = random_subset(g.order(), 1 + static_cast<int>(rng() % g.order()), rng);
    const Subgraph s = induced_subgraph(g, r);
    const std::int64_t direct = 190 * std::int64_t{r.size()} -
                                84 * std::int64_t{g.edges_within(r)} -
                                8 * std::int64_t{oracle::t_number(s.graph)};
    CHECK(potential(g, r).num == direct);
  }
}

TEST_CASE("KY bounds hold on every small 5-Ore graph and named graphs") {
  for (const Graph &g : critical_sample()) {
    const Report r = verify_ore5_bounds(g, 4000);
    CHECK(r.all_pass());
    CHECK((p_ky(g) >= 3) == is_5_ore(g).has_value());
  }
}

TEST_CASE("random extension records satisfy all three inequalities") {
  std::mt19937_64 rng(54);
  const auto graphs = critical_sample();
  int records = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const Graph &g = graphs[rng() % graphs.size()];
    if (g.order() < 7)
      continue;
    const int size = 5 + static_cast<int>(rng() % (g.order() - 5));
    const VertexSet r = random_subset(g.order(), size, rng);
    if (!is_k_colorable(induced_subgraph(g, r).graph, 4))
      continue;
    const Coloring phi = random_subset_coloring(g, r, rng);
    const ExtensionRecord rec = critical_extension(g, r, phi);
    CHECK(is_5_critical(rec.extender.graph));
    CHECK((rec.r_prime & r) == r);
    const Report rep = verify_extension_inequalities(rec);
    CHECK(rep.all_pass());
    ++records;
  }
  CHECK(records > 60);
}

TEST_CASE("Ore-collapsible blocks give total extensions with core one") {
  std::mt19937_64 rng(55);
  for (const OreClass &c : ore_upto_13()) {
    for (VertexSet r : ore_collapsible_subsets(c.graph)) {
      CHECK(is_collapsible(c.graph, r).collapsible);
      CHECK(verify_collapsible_potential(c.graph, r).all_pass());
      const ExtensionRecord rec =
          critical_extension(c.graph, r, random_subset_coloring(c.graph, r, rng));
      CHECK(rec.total());
      CHECK(rec.core_size() == 1);
    }
  }
}

TEST_CASE("collapsible sets of proper size are detected both ways") {
  // Brute force over sets of size n - 4 in the 9-vertex graphs: collapsible
  // exactly when no proper colouring of G[R] separates the boundary.
  for (const OreClass &c : ore_upto_13()) {
    if (c.graph.order() != 9)
      continue;
    const Graph &g = c.graph;
    for (std::uint64_t mask = 0; mask < (1ULL << 9); ++mask) {
      VertexSet r;
      for (int v = 0; v < 9; ++v)
        if (mask >> v & 1ULL)
          r.insert(v);
      if (r.size() < 5 || r.size() == 9)
        continue;
      const VertexSet bd = boundary(g, r);
      bool separated = false;
      const Subgraph s = induced_subgraph(g, r);
      for_each_k_coloring(s.graph, 4, [&](const Coloring &col) {
        std::set<int> used;
        for (std::size_t i = 0; i < s.origin.size(); ++i)
          if (bd.contains(s.origin[i]))
            used.insert(col[static_cast<int>(i)]);
        separated = used.size() > 1;
        return !separated;
      });
      if (!is_k_colorable(s.graph, 4))
        continue;
      CHECK(is_collapsible(g, r).collapsible == (!separated && !bd.empty()));
    }
  }
}

TEST_CASE("packing grows across every composition up to 13 vertices") {
  std::map<CanonKey, int> t_of;
  enumerate_5_ore(
      13, [&](const OreClass &c) { t_of[c.key] = t_number(c.graph).value; },
      [&](const CompositionEvent &ev) {
        const int t = t_of.at(ev.result.key);
        const Report rep = verify_composition_packing(
            ev.result.key.short_id(), t, t_of.at(ev.edge_side.key), t_of.at(ev.vertex_side.key),
            ev.edge_side.graph.order() == 5, ev.vertex_side.graph.order() == 5);
        CHECK(rep.all_pass());
      });
}

TEST_CASE("discharging conserves charge") {
  std::mt19937_64 rng(56);
  for (int trial = 0; trial < 80; ++trial) {
    const Graph g = oracle::random_graph(4 + trial % 14, 0.35, rng);
    const ChargeLedger led = run_discharge(g);
    CHECK(led.final_total() == led.initial_total().widen<84>());
    CHECK(led.initial_total() ==
          Rat21::integer(9 * g.order() - 4 * g.size()) + kEpsilon * g.order());
    for (const Transfer &t : led.transfers) {
      CHECK(g.degree(t.from) == 4);
      CHECK(g.degree(t.to) >= 5);
      CHECK(g.adjacent(t.from, t.to));
    }
  }
  for (const Graph &g : critical_sample())
    CHECK(closing_inequalities(g).all_pass());
}

TEST_CASE("recogniser round trip on relabelled compositions") {
  std::mt19937_64 rng(57);
  for (const OreClass &c : ore_upto_13()) {
    const Graph h = oracle::shuffled(c.graph, rng);
    const auto recipe = is_5_ore(h);
    REQUIRE(recipe);
    CHECK(canonical_key(ore_compose(*recipe).graph) == c.key);
    CHECK(OreRecipe::parse(recipe->to_string()) == *recipe);
  }
}

TEST_CASE("5-Ore graphs have gems away from any vertex and any K4") {
  for (const OreClass &c : ore_upto_13()) {
    if (c.graph.order() == 5)
      continue;
    const GemReport gr = gems(c.graph);
    CHECK_FALSE(gr.ungemmed());
    for (int v = 0; v < c.graph.order(); ++v)
      CHECK(gr.has_gem_avoiding(VertexSet::single(v)));
    CHECK(verify_ore_packing_and_gems(c.graph).all_pass());
  }
}
