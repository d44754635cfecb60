#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

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

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::vector<OreClass> g_ore;
std::map<CanonKey, int> g_t;

struct EventRecord {
  CanonKey result, edge_side, vertex_side;
  bool edge_k5 = false, vertex_k5 = false;
};
std::vector<EventRecord> g_events;

int cached_t(const OreClass &c) {
  auto it = g_t.find(c.key);
  if (it == g_t.end())
    it = g_t.emplace(c.key, t_number(c.graph).value).first;
  return it->second;
}

std::vector<Graph> named_non_ore() {
  return {*named_graph("c5_join_k2"), *named_graph("k1_join_groetzsch"),
          *named_graph("mycielski_groetzsch")};
}

Outcome ac1() {
  std::map<int, int> per_n;
  for (const OreClass &c : g_ore) {
    ++per_n[c.graph.order()];
    if (p_ky(c.graph) != 5 || !is_5_critical(c.graph))
      return {false, c.key.short_id()};
  }
  std::string counts;
  for (auto [n, k] : per_n)
    counts += (counts.empty() ? "" : ",") + std::to_string(n) + ":" + std::to_string(k);
  return {true, "classes " + counts};
}

Outcome ac2() {
  int checked = 0;
  for (const OreClass &c : g_ore) {
    if (c.graph.order() == 5)
      continue;
    ++checked;
    if (4 * cached_t(c) < c.graph.order() + 7)
      return {false, c.key.short_id()};
  }
  return {true, std::to_string(checked) + " graphs"};
}

Outcome ac3() {
  for (const EventRecord &ev : g_events) {
    const int t = g_t.at(ev.result);
    const Report r = verify_composition_packing(ev.result.short_id(), t, g_t.at(ev.edge_side),
                                                g_t.at(ev.vertex_side), ev.edge_k5,
                                                ev.vertex_k5);
    if (!r.all_pass())
      return {false, ev.result.short_id()};
  }
  return {true, std::to_string(g_events.size()) + " compositions"};
}

Outcome ac4() {
  std::mt19937_64 rng(20240601);
  int done = 0;
  for (int i = 0; i < 200; ++i) {
    const int n = 4 + static_cast<int>(rng() % 9);
    const double p = 0.25 + 0.5 * std::uniform_real_distribution<double>()(rng);
    const Graph g = oracle::random_graph(n, p, rng);
    const TNumber t = t_number(g);
    if (t.value != oracle::t_number(g) || !is_valid_packing(g, t.witness))
      return {false, "random graph " + std::to_string(i)};
    ++done;
  }
  for (const OreClass &c : g_ore) {
    if (c.graph.order() > 12)
      continue;
    if (cached_t(c) != oracle::t_number(c.graph))
      return {false, c.key.short_id()};
    ++done;
  }
  for (const Graph &g : named_non_ore())
    if (g.order() <= 12) {
      if (t_number(g).value != oracle::t_number(g))
        return {false, canonical_key(g).short_id()};
      ++done;
    }
  return {true, std::to_string(done) + " graphs"};
}

Outcome ac5() {
  int done = 0;
  auto run = [&](const Graph &g, MainCase expect) {
    const MainTheoremResult r = verify_main_theorem(g);
    ++done;
    return r.which == expect && r.report.all_pass();
  };
  for (const OreClass &c : g_ore)
    if (!run(c.graph, c.graph.order() == 5 ? MainCase::K5 : MainCase::Ore))
      return {false, c.key.short_id()};
  for (const Graph &g : named_non_ore())
    if (!run(g, MainCase::Other))
      return {false, canonical_key(g).short_id()};
  return {true, std::to_string(done) + " graphs"};
}

Outcome ac6() {
  const Graph g = mycielskian(groetzsch_graph());
  bool triangle = false;
  for (const Edge &e : g.edges())
    triangle = triangle || !(g.neighbors(e.u) & g.neighbors(e.v)).empty();
  if (triangle || !is_5_critical(g) || g.order() != 23 || g.size() != 71)
    return {false, "construction"};
  const MainTheoremResult r = verify_main_theorem(g);
  const CheckRow *row = r.report.find("triangle_free_edges");
  if (!row || !row->pass || !r.report.all_pass())
    return {false, "bound"};
  return {true, "slack " + std::to_string(row->slack_num) + "/" +
                    std::to_string(row->slack_den)};
}

Outcome ac7() {
  std::vector<Graph> hosts;
  for (const OreClass &c : g_ore)
    if (c.graph.order() <= 13 && c.graph.order() >= 7)
      hosts.push_back(c.graph);
  hosts.push_back(*named_graph("c5_join_k2"));
  hosts.push_back(*named_graph("k1_join_groetzsch"));
  std::mt19937_64 rng(7);
  int records = 0, attempts = 0;
  while (records < 500 && attempts < 20000) {
    ++attempts;
    const Graph &g = hosts[rng() % hosts.size()];
    const int n = g.order();
    const int k = std::uniform_int_distribution<int>(5, n - 1)(rng);
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v)
      order[v] = v;
    std::shuffle(order.begin(), order.end(), rng);
    VertexSet r;
    for (int j = 0; j < k; ++j)
      r.insert(order[j]);
    const Coloring phi = random_subset_coloring(g, r, rng);
    const Report rep = verify_extension_inequalities(critical_extension(g, r, phi));
    if (!rep.all_pass())
      return {false, canonical_key(g).short_id()};
    ++records;
  }
  return {records == 500, std::to_string(records) + " records"};
}

Outcome ac8() {
  std::vector<Graph> hosts{ore_composition(complete_graph(5), Edge{0, 1}, complete_graph(5), 0,
                                           VertexSet{1}, VertexSet{2, 3, 4})};
  for (const OreClass &c : g_ore)
    if (c.graph.order() == 13)
      hosts.push_back(c.graph);
  std::mt19937_64 rng(8);
  int blocks = 0;
  for (const Graph &g : hosts) {
    const auto subsets = ore_collapsible_subsets(g);
    if (subsets.empty())
      return {false, canonical_key(g).short_id() + " has no block side"};
    for (VertexSet r : subsets) {
      if (!is_collapsible(g, r).collapsible || !verify_collapsible_potential(g, r).all_pass())
        return {false, canonical_key(g).short_id()};
      for (int s = 0; s < 3; ++s) {
        const ExtensionRecord rec = critical_extension(g, r, random_subset_coloring(g, r, rng));
        if (!rec.total() || rec.core_size() != 1)
          return {false, canonical_key(g).short_id() + " extension"};
      }
      ++blocks;
    }
  }
  return {true, std::to_string(blocks) + " block sides"};
}

Outcome ac9() {
  std::vector<Graph> graphs;
  for (const OreClass &c : g_ore)
    graphs.push_back(c.graph);
  for (const Graph &g : named_non_ore())
    graphs.push_back(g);
  int vacuous = 0;
  for (const Graph &g : graphs) {
    const Report r = closing_inequalities(g);
    if (!r.all_pass() || !r.find("edge_mic") || !r.find("mic_d4") ||
        !r.find("charge_conservation"))
      return {false, canonical_key(g).short_id()};
    if (!r.find("d4_sparse")) {
      if (potential(g) > Rat21{})
        return {false, canonical_key(g).short_id() + " d4_sparse missing"};
      ++vacuous;
    }
  }
  return {true, std::to_string(graphs.size()) + " graphs, " + std::to_string(vacuous) +
                    " with d4_sparse vacuous"};
}

Outcome ac10() {
  int done = 0;
  for (const OreClass &c : g_ore) {
    if (!(p_ky(c.graph) >= 3) || !is_5_ore(c.graph))
      return {false, c.key.short_id()};
    if (!verify_ore5_bounds(c.graph, 20000).all_pass())
      return {false, c.key.short_id() + " bounds"};
    ++done;
  }
  for (const Graph &g : named_non_ore()) {
    if (p_ky(g) >= 3 || is_5_ore(g))
      return {false, canonical_key(g).short_id()};
    ++done;
  }
  return {true, std::to_string(done) + " graphs"};
}

} // namespace

int main() {
  g_ore = enumerate_5_ore(
      17, {},
      [](const CompositionEvent &ev) {
        if (ev.result.graph.order() > 13)
          return;
        g_events.push_back({ev.result.key, ev.edge_side.key, ev.vertex_side.key,
                            ev.edge_side.graph.order() == 5,
                            ev.vertex_side.graph.order() == 5});
      });
  for (const OreClass &c : g_ore)
    if (c.graph.order() <= 13)
      cached_t(c);

  const std::vector<std::pair<const char *, std::function<Outcome()>>> criteria{
      {"AC1 enumerated 5-Ore graphs up to 17 vertices are 5-critical with KY potential 5", ac1},
      {"AC2 every 5-Ore graph other than K5 has 4T >= n + 7", ac2},
      {"AC3 packing inequalities across every composition up to 13 vertices", ac3},
      {"AC4 T agrees with the exhaustive oracle", ac4},
      {"AC5 potential bounds by case for K5, 5-Ore and named graphs", ac5},
      {"AC6 triangle-free edge bound on the Mycielskian of Groetzsch", ac6},
      {"AC7 500 random extension records satisfy all inequalities", ac7},
      {"AC8 Ore block sides are collapsible with total core-one extensions", ac8},
      {"AC9 closing inequalities and charge conservation", ac9},
      {"AC10 KY potential at least 3 exactly for 5-Ore graphs", ac10},
  };
  int failed = 0;
  for (const auto &[name, fn] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception &ex) {
      o = {false, std::string("exception: ") + ex.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %s (%s; %.1fs)\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str(),
                secs);
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
