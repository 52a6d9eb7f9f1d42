#include "peonto/sampler.hpp"

#include <algorithm>
#include <set>

#include "peonto/features.hpp"
#include "peonto/rng.hpp"

namespace peonto {
namespace {

std::string stratum_of(const RawSample& sample, SampleMode mode) {
  std::string label = sample.label == 1 ? "malware" : "benign";
  if (mode == SampleMode::TwoWay) return label;
  return (classify_file_kind(sample) == FileKind::ExecutableFile ? "exe_" : "dll_") +
         label;
}

std::vector<std::string> strata_names(SampleMode mode) {
  if (mode == SampleMode::TwoWay) return {"benign", "malware"};
  return {"dll_benign", "dll_malware", "exe_benign", "exe_malware"};
}

}  // namespace

FractionDraw sample_fraction(const std::vector<RawSample>& records,
                             const SamplePlan& plan) {
  const auto names = strata_names(plan.mode);
  if (plan.size == 0 || plan.size % names.size() != 0)
    throw SamplingError("sample size " + std::to_string(plan.size) +
                        " does not divide evenly into " +
                        std::to_string(names.size()) + " strata");
  if (plan.variant == 0) throw SamplingError("variant numbering starts at 1");
  const std::size_t per_stratum = plan.size / names.size();

  // Stratum pools in record order, first md5 occurrence wins.
  std::map<std::string, std::vector<std::size_t>> pools;
  for (const auto& name : names) pools[name];
  std::set<std::string> seen_md5;
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (!records[i].labeled()) continue;
    if (!seen_md5.insert(records[i].md5).second) continue;
    pools[stratum_of(records[i], plan.mode)].push_back(i);
  }

  FractionDraw draw;
  for (const auto& name : names) {
    if (pools[name].size() < per_stratum)
      throw SamplingError(name, pools[name].size(), per_stratum);
    draw.stratum_population[name] = pools[name].size();
  }

  for (const auto& name : names) {
    std::vector<std::size_t> unused = pools[name];
    std::vector<std::size_t> used;
    // Earlier variants consume their picks first, so variants stay disjoint
    // while the pool lasts; a dry pool falls back to already-used picks.
    for (unsigned v = 1; v <= plan.variant; ++v) {
      std::mt19937_64 gen(mix_seed(plan.seed, v));
      deterministic_shuffle(unused, gen);
      std::vector<std::size_t> picks(
          unused.begin(),
          unused.begin() + static_cast<std::ptrdiff_t>(
                               std::min(per_stratum, unused.size())));
      if (picks.size() < per_stratum) {
        std::vector<std::size_t> refill = used;
        deterministic_shuffle(refill, gen);
        picks.insert(picks.end(), refill.begin(),
                     refill.begin() +
                         static_cast<std::ptrdiff_t>(per_stratum - picks.size()));
        if (v == plan.variant)
          draw.warnings.push_back(
              "stratum " + name + " reuses " +
              std::to_string(per_stratum - unused.size()) +
              " earlier picks; variant " + std::to_string(v) +
              " is not disjoint from variants 1.." + std::to_string(v - 1));
      }
      if (v == plan.variant) {
        draw.selected.insert(draw.selected.end(), picks.begin(), picks.end());
      } else {
        unused.erase(unused.begin(),
                     unused.begin() + static_cast<std::ptrdiff_t>(
                                          std::min(per_stratum, unused.size())));
        std::sort(unused.begin(), unused.end());
        used.insert(used.end(), picks.begin(), picks.end());
        std::sort(used.begin(), used.end());
        used.erase(std::unique(used.begin(), used.end()), used.end());
      }
    }
  }

  std::sort(draw.selected.begin(), draw.selected.end(),
            [&](std::size_t a, std::size_t b) { return records[a].md5 < records[b].md5; });
  return draw;
}

}  // namespace peonto
