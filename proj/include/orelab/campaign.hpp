#ifndef ORELAB_CAMPAIGN_HPP
#define ORELAB_CAMPAIGN_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "orelab/corpus.hpp"
#include "orelab/report.hpp"

namespace orelab {

enum class Suite { Main, Ore5, Extensions, Lemma2, Discharge, All };

std::optional<Suite> parse_suite(std::string_view name);
std::string suite_name(Suite s);

struct CampaignOptions {
  std::size_t budget = 20000;   ///< subset sweep limit per graph
  int jobs = 1;                 ///< worker threads
  std::uint64_t seed = 1;
  int extension_samples = 8;    ///< random (R, phi) records per graph
};

/// Runs a suite over the entries on a bounded worker pool; the report keeps
/// corpus order regardless of scheduling. Every visited entry also gets a
/// cache_fresh row comparing stored and recomputed invariants.
Report run_campaign(Suite suite, const std::vector<CorpusEntry> &entries,
                    const CampaignOptions &opt);

/// The report for one entry (what each worker computes).
Report run_entry(Suite suite, const CorpusEntry &entry, const CampaignOptions &opt);

/// Seed for one entry: independent of corpus order and worker count.
std::uint64_t entry_seed(std::uint64_t seed, const CorpusEntry &entry);

} // namespace orelab

#endif // ORELAB_CAMPAIGN_HPP
