#include "orelab/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <random>
#include <thread>

#include "orelab/coloring.hpp"
#include "orelab/discharge.hpp"
#include "orelab/ore.hpp"
#include "orelab/packing.hpp"
#include "orelab/potential.hpp"

namespace orelab {

std::optional<Suite> parse_suite(std::string_view name) {
  if (name == "main")
    return Suite::Main;
  if (name == "ore5")
    return Suite::Ore5;
  if (name == "extensions")
    return Suite::Extensions;
  if (name == "lemma2")
    return Suite::Lemma2;
  if (name == "discharge")
    return Suite::Discharge;
  if (name == "all")
    return Suite::All;
  return std::nullopt;
}

std::string suite_name(Suite s) {
  switch (s) {
  case Suite::Main:
    return "main";
  case Suite::Ore5:
    return "ore5";
  case Suite::Extensions:
    return "extensions";
  case Suite::Lemma2:
    return "lemma2";
  case Suite::Discharge:
    return "discharge";
  case Suite::All:
    return "all";
  }
  return "?";
}

std::uint64_t entry_seed(std::uint64_t seed, const CorpusEntry &entry) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : entry.key.bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return seed * 0x9e3779b97f4a7c15ULL ^ h;
}

namespace {

// T of every materialised side, node by node, bottom up.
struct NodeGraphs {
  Graph graph;
  int t = 0;
};

NodeGraphs audit_recipe(const OreRecipe &r, Report &rep) {
  if (r.is_leaf()) {
    Graph k5 = complete_graph(5);
    return {k5, 2};
  }
  const NodeGraphs left = audit_recipe(r.edge_side(), rep);
  const NodeGraphs right = audit_recipe(r.vertex_side(), rep);
  Graph g = ore_compose(r).graph;
  const int t = t_number(g).value;
  rep.append(verify_composition_packing(canonical_key(g).short_id(), t, left.t,
                                        right.t, r.edge_side().is_leaf(),
                                        r.vertex_side().is_leaf()));
  return {std::move(g), t};
}

void extension_suite(const CorpusEntry &e, const CampaignOptions &opt, Report &rep) {
  const Graph &g = e.graph;
  const int n = g.order();
  if (n < 6)
    return;
  std::mt19937_64 rng(entry_seed(opt.seed, e));
  for (int i = 0; i < opt.extension_samples; ++i) {
    const int k = std::uniform_int_distribution<int>(5, n - 1)(rng);
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v)
      order[v] = v;
    std::shuffle(order.begin(), order.end(), rng);
    VertexSet r;
    for (int j = 0; j < k; ++j)
      r.insert(order[j]);
    const Coloring phi = random_subset_coloring(g, r, rng);
    rep.append(verify_extension_inequalities(critical_extension(g, r, phi)));
  }
  for (VertexSet r : ore_collapsible_subsets(g)) {
    if (r.size() < 5)
      continue;
    rep.append(verify_collapsible_potential(g, r));
    const Coloring phi = random_subset_coloring(g, r, rng);
    const ExtensionRecord rec = critical_extension(g, r, phi);
    rep.holds("collapsible_extension_total", e.id(),
              rec.total() && rec.core_size() == 1);
  }
}

} // namespace

Report run_entry(Suite suite, const CorpusEntry &e, const CampaignOptions &opt) {
  Report rep;
  const bool all = suite == Suite::All;
  const Invariants fresh = compute_invariants(e.graph);
  rep.holds("cache_fresh", e.id(), fresh == e.invariants);
  const bool critical = fresh.five_critical;

  if ((all || suite == Suite::Main) && critical)
    rep.append(verify_main_theorem(e.graph).report);
  if ((all || suite == Suite::Ore5) && critical)
    rep.append(verify_ore5_bounds(e.graph, opt.budget));
  if ((all || suite == Suite::Extensions) && critical)
    extension_suite(e, opt, rep);
  if ((all || suite == Suite::Lemma2) && fresh.five_ore) {
    std::optional<OreRecipe> recipe = e.recipe;
    if (!recipe)
      recipe = is_5_ore(e.graph);
    audit_recipe(*recipe, rep);
    rep.append(verify_ore_packing_and_gems(e.graph));
  }
  if (all || suite == Suite::Discharge) {
    if (critical) {
      rep.append(closing_inequalities(e.graph));
    } else {
      const ChargeLedger led = run_discharge(e.graph);
      rep.equal("charge_conservation", e.id(), led.final_total(),
                led.initial_total().widen<84>());
    }
  }
  return rep;
}

Report run_campaign(Suite suite, const std::vector<CorpusEntry> &entries,
                    const CampaignOptions &opt) {
  std::vector<Report> parts(entries.size());
  std::vector<std::exception_ptr> errors(entries.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < entries.size(); i = next++) {
      try {
        parts[i] = run_entry(suite, entries[i], opt);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const int jobs = std::max(1, std::min<int>(opt.jobs, static_cast<int>(entries.size())));
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j)
    pool.emplace_back(worker);
  worker();
  for (std::thread &t : pool)
    t.join();

  Report out;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (errors[i]) {
      std::string what = "unknown error";
      try {
        std::rethrow_exception(errors[i]);
      } catch (const std::exception &ex) {
        what = ex.what();
      } catch (...) {
      }
      out.holds("entry_error", entries[i].id(), false);
      out.info("entry_error", entries[i].id(), what);
      continue;
    }
    out.append(parts[i]);
  }
  return out;
}

} // namespace orelab
