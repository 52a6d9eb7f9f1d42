#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "peonto/ember.hpp"

namespace peonto {

// TwoWay balances malware against benign; FourWay additionally splits each
// half into executables and libraries.
enum class SampleMode { TwoWay, FourWay };

struct SamplePlan {
  std::size_t size = 0;    // total records drawn; must divide evenly by strata
  std::uint64_t seed = 1;
  unsigned variant = 1;    // 1-based; same seed, different variants are disjoint
  SampleMode mode = SampleMode::TwoWay;
};

class SamplingError : public std::runtime_error {
 public:
  SamplingError(std::string stratum, std::size_t have, std::size_t need)
      : std::runtime_error("stratum " + stratum + " has " + std::to_string(have) +
                           " samples, need " + std::to_string(need)),
        stratum_(std::move(stratum)),
        have_(have),
        need_(need) {}

  explicit SamplingError(const std::string& msg)
      : std::runtime_error(msg), have_(0), need_(0) {}

  const std::string& stratum() const { return stratum_; }
  std::size_t have() const { return have_; }
  std::size_t need() const { return need_; }

 private:
  std::string stratum_;
  std::size_t have_;
  std::size_t need_;
};

struct FractionDraw {
  // Indices into the caller's record vector, ordered by md5.
  std::vector<std::size_t> selected;
  // Population sizes per stratum after md5 dedup and label filtering.
  std::map<std::string, std::size_t> stratum_population;
  // Set when a stratum was too small to keep this variant disjoint from the
  // earlier ones and picks had to be reused.
  std::vector<std::string> warnings;
};

// Draws a balanced fraction. Unlabeled records and repeated md5s (first
// occurrence wins) never enter the pool. Identical plans give identical
// draws. Plans differing only in variant give disjoint draws while the
// strata are large enough; once a stratum runs dry the draw reuses earlier
// picks and says so in warnings. A stratum too small for even one draw
// raises SamplingError.
FractionDraw sample_fraction(const std::vector<RawSample>& records,
                             const SamplePlan& plan);

}  // namespace peonto
