// orelab: corpus and verification driver for 5-critical graph experiments.

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "orelab/campaign.hpp"
#include "orelab/coloring.hpp"
#include "orelab/constructions.hpp"
#include "orelab/corpus.hpp"
#include "orelab/discharge.hpp"
#include "orelab/graph_io.hpp"
#include "orelab/ore.hpp"
#include "orelab/packing.hpp"
#include "orelab/potential.hpp"

using namespace orelab;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

std::string join_set(VertexSet s) {
  std::string out;
  for (int v : s)
    out += (out.empty() ? "" : ",") + std::to_string(v);
  return out.empty() ? "-" : out;
}

CorpusEntry require_entry(const Corpus &corpus, const std::string &needle) {
  std::optional<CorpusEntry> e;
  try {
    e = corpus.find(needle);
  } catch (const std::invalid_argument &ex) {
    throw UsageError(ex.what());
  }
  if (!e)
    throw UsageError("no corpus entry " + needle + " in " + corpus.dir().string());
  return *e;
}

VertexSet parse_vertex_list(const std::string &text, int n) {
  VertexSet r;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t used = 0;
    int v = -1;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception &) {
      used = 0;
    }
    if (used != tok.size() || v < 0 || v >= n)
      throw UsageError("bad vertex in --r: '" + tok + "'");
    r.insert(v);
  }
  return r;
}

void print_entry(const CorpusEntry &e) {
  const Invariants &v = e.invariants;
  std::cout << "id " << e.id() << "\n"
            << "graph6 " << e.key.bytes << "\n"
            << "provenance " << e.provenance << "\n"
            << "n=" << v.n << " m=" << v.m << " p_ky=" << v.p_ky << " T=" << v.t
            << " p=" << v.p_num << "/21 mic=" << v.mic << " S=" << v.s
            << " M=" << v.m4 << " 5-critical=" << (v.five_critical ? "yes" : "no")
            << " 5-ore=" << (v.five_ore ? "yes" : "no") << "\n";
  if (e.recipe)
    std::cout << "recipe " << e.recipe->to_string() << "\n";
}

int cmd_gen(Corpus &corpus, int max_n) {
  if (max_n < 5 || max_n > 21)
    throw UsageError("--max-n must be in 5..21");
  int added = 0, existing = 0;
  enumerate_5_ore(max_n, [&](const OreClass &c) {
    if (corpus.contains(c.key)) {
      ++existing;
      return;
    }
    corpus.add(make_entry(c.graph, "recipe", c.recipe));
    ++added;
  });
  std::cout << "added " << added << " existing " << existing << "\n";
  corpus.append_ledger(utc_now() + " gen max_n=" + std::to_string(max_n) +
                       " added=" + std::to_string(added));
  return kExitPass;
}

int cmd_add(Corpus &corpus, const std::string &what) {
  std::vector<std::pair<Graph, std::string>> graphs;
  if (auto g = named_graph(what)) {
    graphs.emplace_back(*g, "named:" + what);
  } else {
    std::ifstream in(what);
    if (!in)
      throw UsageError(what + ": not a named graph and not a readable file");
    try {
      for (Graph &g : read_graphs(in))
        graphs.emplace_back(std::move(g),
                            "file:" + std::filesystem::path(what).filename().string());
    } catch (const ParseError &ex) {
      throw UsageError(what + ": " + ex.what());
    }
  }
  for (auto &[g, prov] : graphs) {
    const CorpusEntry e = make_entry(g, prov);
    const bool fresh = corpus.add(e);
    std::cout << (fresh ? "added " : "exists ") << e.id() << " n=" << e.invariants.n
              << " m=" << e.invariants.m << "\n";
    if (fresh)
      corpus.append_ledger(utc_now() + " add " + e.id() + " " + prov);
  }
  return kExitPass;
}

int cmd_verify(Corpus &corpus, const std::string &suite_text,
               const CampaignOptions &opt) {
  const auto suite = parse_suite(suite_text);
  if (!suite)
    throw UsageError("unknown suite '" + suite_text +
                     "' (main|ore5|extensions|lemma2|discharge|all)");
  const std::vector<CorpusEntry> entries = corpus.load_all();
  if (entries.empty())
    std::cerr << "warning: corpus " << corpus.dir().string() << " is empty\n";
  const Report rep = run_campaign(*suite, entries, opt);
  std::cout << rep.to_text();
  const std::string summary = "SUMMARY suite=" + suite_name(*suite) +
                              " entries=" + std::to_string(entries.size()) +
                              " checks=" + std::to_string(rep.checks().size()) +
                              " failures=" + std::to_string(rep.failures());
  std::cout << summary << "\n";
  corpus.append_ledger(utc_now() + " verify " + summary.substr(8) +
                       " seed=" + std::to_string(opt.seed));
  return rep.all_pass() ? kExitPass : kExitFail;
}

int cmd_extend(const Corpus &corpus, const std::string &key, const std::string &r_text,
               std::uint64_t seed) {
  const CorpusEntry e = require_entry(corpus, key);
  const Graph &g = e.graph;
  const int n = g.order();
  std::mt19937_64 rng(seed);
  VertexSet r;
  if (r_text == "random") {
    if (n < 6)
      throw UsageError("graph too small for a proper subset of 5 vertices");
    const int k = std::uniform_int_distribution<int>(5, n - 1)(rng);
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v)
      order[v] = v;
    std::shuffle(order.begin(), order.end(), rng);
    for (int j = 0; j < k; ++j)
      r.insert(order[j]);
  } else {
    r = parse_vertex_list(r_text, n);
  }
  if (r == g.vertices())
    throw UsageError("R must be a proper subset of V(G)");
  if (r.size() < 5)
    throw UsageError("R must have at least 5 vertices");
  if (!e.invariants.five_critical)
    throw UsageError("extensions need a 5-critical graph");

  const Coloring phi = random_subset_coloring(g, r, rng);
  const ExtensionRecord rec = critical_extension(g, r, phi);
  std::cout << "graph " << e.id() << " n=" << n << " m=" << g.size() << "\n";
  std::cout << "R " << join_set(r) << "\n";
  std::cout << "phi";
  for (int v : r)
    std::cout << " " << v << ":" << phi[v] + 1;
  std::cout << "\n";
  std::cout << "identified n=" << rec.identified.graph.order()
            << " m=" << rec.identified.graph.size() << " empty_classes=";
  std::string empties;
  for (int c = 0; c < 4; ++c)
    if (rec.identified.empty_class[c])
      empties += (empties.empty() ? "" : ",") + std::to_string(c + 1);
  std::cout << (empties.empty() ? "-" : empties) << "\n";
  std::cout << "extender n=" << rec.extender.graph.order()
            << " m=" << rec.extender.graph.size() << " core_size=" << rec.core_size()
            << "\n";
  std::cout << "R' " << join_set(rec.r_prime) << "\n";
  std::cout << "complete=" << (rec.complete ? "yes" : "no")
            << " spanning=" << (rec.spanning ? "yes" : "no")
            << " total=" << (rec.total() ? "yes" : "no") << "\n";
  const Report rep = verify_extension_inequalities(rec);
  std::cout << rep.to_text();
  return rep.all_pass() ? kExitPass : kExitFail;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"orelab: 5-critical graph laboratory"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string corpus_dir = Corpus::default_dir().string();
  app.add_option("--corpus", corpus_dir, "corpus directory (default $ORELAB_CORPUS or ./corpus)");

  int max_n = 13;
  auto *gen = app.add_subcommand("gen", "enumerate 5-Ore graphs into the corpus");
  gen->add_option("--max-n", max_n, "largest order")->required();

  std::string add_what;
  auto *add = app.add_subcommand("add", "add a named graph or a graph file");
  add->add_option("what", add_what,
                  "k5 | c5_join_k2 | groetzsch | mycielski_groetzsch | "
                  "k1_join_groetzsch | path")
      ->required();

  std::string suite;
  CampaignOptions opt;
  auto *verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "main | ore5 | extensions | lemma2 | discharge | all")
      ->required();
  verify->add_option("--budget", opt.budget, "subset sweep limit per graph");
  verify->add_option("--jobs", opt.jobs, "worker threads");
  verify->add_option("--seed", opt.seed, "seed for sampled records");
  verify->add_option("--samples", opt.extension_samples, "random extensions per graph");

  std::string key, r_text;
  std::uint64_t seed = 1;
  auto *extend = app.add_subcommand("extend", "build one critical extension");
  extend->add_option("key", key, "corpus entry id or prefix")->required();
  extend->add_option("--r", r_text, "comma-separated vertices or 'random'")->required();
  extend->add_option("--seed", seed, "seed for R and the colouring");

  std::vector<CLI::App *> keyed;
  for (const char *name : {"t", "potential", "discharge", "audit", "show"}) {
    auto *sub = app.add_subcommand(name);
    sub->add_option("key", key, "corpus entry id or prefix")->required();
    keyed.push_back(sub);
  }
  keyed[0]->description("maximum triangle/K4 packing");
  keyed[1]->description("exact potentials");
  keyed[2]->description("charge ledger and closing inequalities");
  keyed[3]->description("structural predicate table");
  keyed[4]->description("stored entry");
  auto *list = app.add_subcommand("list", "list corpus entries");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }
  Corpus corpus(corpus_dir);
  try {
    if (*gen)
      return cmd_gen(corpus, max_n);
    if (*add)
      return cmd_add(corpus, add_what);
    if (*verify)
      return cmd_verify(corpus, suite, opt);
    if (*extend)
      return cmd_extend(corpus, key, r_text, seed);
    if (*list) {
      for (const CorpusEntry &e : corpus.load_all())
        std::cout << e.id() << " n=" << e.invariants.n << " m=" << e.invariants.m
                  << " " << e.provenance << "\n";
      return kExitPass;
    }
    const CorpusEntry e = require_entry(corpus, key);
    if (*keyed[0]) {
      const TNumber t = t_number(e.graph);
      std::cout << "T=" << t.value << "\n";
      for (VertexSet p : t.witness.pieces)
        std::cout << "piece " << join_set(p) << "\n";
    } else if (*keyed[1]) {
      std::cout << "p_ky=" << p_ky(e.graph) << "\n"
                << "p=" << potential(e.graph).to_string() << "\n";
    } else if (*keyed[2]) {
      std::cout << run_discharge(e.graph).dump();
      const Report rep = closing_inequalities(e.graph);
      std::cout << rep.to_text();
      return rep.all_pass() ? kExitPass : kExitFail;
    } else if (*keyed[3]) {
      std::cout << structure_lemma_audit(e.graph).to_text();
    } else if (*keyed[4]) {
      print_entry(e);
    }
    return kExitPass;
  } catch (const UsageError &ex) {
    std::cerr << "orelab: " << ex.what() << "\n";
    return kExitUsage;
  } catch (const std::exception &ex) {
    std::cerr << "orelab: " << ex.what() << "\n";
    return kExitFail;
  }
}
