#ifndef ORELAB_CORPUS_HPP
#define ORELAB_CORPUS_HPP

#include <cstdint>
#include <filesystem>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "orelab/canon.hpp"
#include "orelab/graph.hpp"
#include "orelab/ore.hpp"

namespace orelab {

struct Invariants {
  int n = 0;
  int m = 0;
  int p_ky = 0;
  int t = 0;
  std::int64_t p_num = 0; ///< 21 * p(G)
  bool five_critical = false;
  bool five_ore = false;
  int mic = 0;
  int s = 0; ///< D4 components of size one
  int m4 = 0; ///< D4 components of size two

  bool operator==(const Invariants &) const = default;
};

Invariants compute_invariants(const Graph &g);

struct CorpusEntry {
  CanonKey key;
  Graph graph; ///< canonical labelling
  /// "recipe", "search", "named:<name>" or "file:<name>".
  std::string provenance;
  std::optional<OreRecipe> recipe;
  Invariants invariants;

  std::string id() const { return key.short_id(); }
};

/// Canonicalises g and computes its invariants. A recipe is attached for
/// 5-Ore graphs when none is given.
CorpusEntry make_entry(const Graph &g, std::string provenance,
                       std::optional<OreRecipe> recipe = std::nullopt);

std::string entry_to_json(const CorpusEntry &e);
/// Throws std::runtime_error on malformed documents or when the stored key
/// does not match the stored graph.
CorpusEntry entry_from_json(std::string_view text);

/// A directory of "<short id>.json" files plus an append-only "ledger.txt".
class Corpus {
public:
  explicit Corpus(std::filesystem::path dir);

  /// $ORELAB_CORPUS, or "corpus" in the working directory.
  static std::filesystem::path default_dir();

  const std::filesystem::path &dir() const { return dir_; }
  bool contains(const CanonKey &key) const;
  /// Writes the entry unless its key is present; returns whether it wrote.
  bool add(const CorpusEntry &e);
  /// All entries ordered by (n, id).
  std::vector<CorpusEntry> load_all() const;
  /// Entry whose id equals or uniquely starts with needle.
  std::optional<CorpusEntry> find(std::string_view needle) const;
  void append_ledger(const std::string &line);

private:
  std::filesystem::path path_for(const CanonKey &key) const;

  std::filesystem::path dir_;
  std::mutex ledger_mu_;
};

} // namespace orelab

#endif // ORELAB_CORPUS_HPP
