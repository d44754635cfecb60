#include "orelab/corpus.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "orelab/coloring.hpp"
#include "orelab/graph_io.hpp"
#include "orelab/packing.hpp"
#include "orelab/potential.hpp"
#include "orelab/structure.hpp"

namespace orelab {

namespace fs = std::filesystem;
using nlohmann::json;

Invariants compute_invariants(const Graph &g) {
  Invariants inv;
  inv.n = g.order();
  inv.m = g.size();
  inv.p_ky = p_ky(g);
  inv.t = t_number(g).value;
  inv.p_num = potential(g, inv.t).num;
  inv.five_critical = is_5_critical(g);
  inv.five_ore = inv.five_critical && is_5_ore(g).has_value();
  inv.mic = mic(g).value;
  const D4Components d4 = d4_components(g);
  inv.s = d4.singles;
  inv.m4 = d4.pairs;
  return inv;
}

CorpusEntry make_entry(const Graph &g, std::string provenance,
                       std::optional<OreRecipe> recipe) {
  CanonicalForm cf = canonical_form(g);
  CorpusEntry e;
  e.key = cf.key;
  e.graph = std::move(cf.graph);
  e.provenance = std::move(provenance);
  e.invariants = compute_invariants(e.graph);
  if (!recipe && e.invariants.five_ore)
    recipe = is_5_ore(e.graph);
  e.recipe = std::move(recipe);
  return e;
}

std::string entry_to_json(const CorpusEntry &e) {
  const Invariants &v = e.invariants;
  json j;
  j["id"] = e.id();
  j["key"] = e.key.bytes;
  j["graph"] = to_text(e.graph);
  j["provenance"] = e.provenance;
  j["recipe"] = e.recipe ? json(e.recipe->to_string()) : json(nullptr);
  j["invariants"] = {{"n", v.n},
                     {"m", v.m},
                     {"p_ky", v.p_ky},
                     {"T", v.t},
                     {"p_num21", v.p_num},
                     {"is_5_critical", v.five_critical},
                     {"is_5_ore", v.five_ore},
                     {"mic", v.mic},
                     {"S", v.s},
                     {"M", v.m4}};
  return j.dump(2) + "\n";
}

CorpusEntry entry_from_json(std::string_view text) {
  CorpusEntry e;
  try {
    const json j = json::parse(text);
    e.key.bytes = j.at("key").get<std::string>();
    e.graph = from_text(j.at("graph").get<std::string>());
    e.provenance = j.at("provenance").get<std::string>();
    if (!j.at("recipe").is_null())
      e.recipe = OreRecipe::parse(j.at("recipe").get<std::string>());
    const json &v = j.at("invariants");
    Invariants &inv = e.invariants;
    inv.n = v.at("n");
    inv.m = v.at("m");
    inv.p_ky = v.at("p_ky");
    inv.t = v.at("T");
    inv.p_num = v.at("p_num21");
    inv.five_critical = v.at("is_5_critical");
    inv.five_ore = v.at("is_5_ore");
    inv.mic = v.at("mic");
    inv.s = v.at("S");
    inv.m4 = v.at("M");
  } catch (const json::exception &ex) {
    throw std::runtime_error(std::string("malformed corpus entry: ") + ex.what());
  } catch (const ParseError &ex) {
    throw std::runtime_error(std::string("malformed corpus graph: ") + ex.what());
  }
  if (to_graph6(e.graph) != e.key.bytes)
    throw std::runtime_error("corpus entry key does not match its graph");
  return e;
}

Corpus::Corpus(fs::path dir) : dir_(std::move(dir)) {}

fs::path Corpus::default_dir() {
  if (const char *env = std::getenv("ORELAB_CORPUS"); env && *env)
    return env;
  return "corpus";
}

fs::path Corpus::path_for(const CanonKey &key) const {
  return dir_ / (key.short_id() + ".json");
}

bool Corpus::contains(const CanonKey &key) const { return fs::exists(path_for(key)); }

bool Corpus::add(const CorpusEntry &e) {
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec)
    throw std::runtime_error(dir_.string() + ": " + ec.message());
  const fs::path p = path_for(e.key);
  if (fs::exists(p))
    return false;
  const fs::path tmp = p.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    out << entry_to_json(e);
    if (!out)
      throw std::runtime_error(tmp.string() + ": write failed");
  }
  fs::rename(tmp, p, ec);
  if (ec)
    throw std::runtime_error(p.string() + ": " + ec.message());
  return true;
}

namespace {

std::string slurp(const fs::path &p) {
  std::ifstream in(p, std::ios::binary);
  if (!in)
    throw std::runtime_error(p.string() + ": cannot open");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

} // namespace

std::vector<CorpusEntry> Corpus::load_all() const {
  std::vector<CorpusEntry> out;
  if (!fs::exists(dir_))
    return out;
  for (const auto &de : fs::directory_iterator(dir_)) {
    if (de.path().extension() != ".json")
      continue;
    try {
      out.push_back(entry_from_json(slurp(de.path())));
    } catch (const std::runtime_error &ex) {
      throw std::runtime_error(de.path().string() + ": " + ex.what());
    }
  }
  std::sort(out.begin(), out.end(), [](const CorpusEntry &a, const CorpusEntry &b) {
    if (a.graph.order() != b.graph.order())
      return a.graph.order() < b.graph.order();
    return a.id() < b.id();
  });
  return out;
}

std::optional<CorpusEntry> Corpus::find(std::string_view needle) const {
  if (needle.empty() || !fs::exists(dir_))
    return std::nullopt;
  std::vector<fs::path> hits;
  for (const auto &de : fs::directory_iterator(dir_)) {
    if (de.path().extension() != ".json")
      continue;
    const std::string stem = de.path().stem().string();
    if (stem == needle)
      return entry_from_json(slurp(de.path()));
    if (stem.starts_with(needle))
      hits.push_back(de.path());
  }
  if (hits.size() > 1)
    throw std::invalid_argument("ambiguous entry prefix: " + std::string(needle));
  std::optional<fs::path> hit;
  if (!hits.empty())
    hit = hits.front();
  if (!hit)
    return std::nullopt;
  return entry_from_json(slurp(*hit));
}

void Corpus::append_ledger(const std::string &line) {
  std::lock_guard lock(ledger_mu_);
  std::error_code ec;
  fs::create_directories(dir_, ec);
  std::ofstream out(dir_ / "ledger.txt", std::ios::app);
  out << line << "\n";
  if (!out)
    throw std::runtime_error((dir_ / "ledger.txt").string() + ": append failed");
}

} // namespace orelab
