#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "peonto/ember.hpp"

namespace peonto::test {

// Knobs for the randomized record generator. The entropy rates control how
// often a section lands strictly above 7.0, split by label so corpora with a
// visible malware/benign entropy gap can be produced on demand. When
// mz_one_rate is set it gives the probability of exactly one MZ occurrence
// (otherwise 0, 2, or 11); unset keeps the stock pool.
struct SyntheticOptions {
  double unlabeled_rate = 0.05;
  double no_strings_rate = 0.2;
  double dll_rate = 0.3;
  double malware_high_entropy_rate = 0.15;
  double benign_high_entropy_rate = 0.15;
  std::optional<double> mz_one_rate;
};

// One full NDJSON record. md5 uniqueness is guaranteed by embedding `index`.
std::string synthetic_record(std::mt19937_64& gen, std::size_t index,
                             const SyntheticOptions& opts = {});

std::vector<std::string> synthetic_lines(std::uint64_t seed, std::size_t count,
                                         const SyntheticOptions& opts = {});

// Generated lines run through parse_sample, so the corpus always reflects
// what the real reader produces.
std::vector<RawSample> synthetic_corpus(std::uint64_t seed, std::size_t count,
                                        const SyntheticOptions& opts = {});

}  // namespace peonto::test
