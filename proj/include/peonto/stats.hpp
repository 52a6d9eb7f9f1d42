#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "peonto/ember.hpp"

namespace peonto {

// Fixed-width histogram with one count row per label. Every bin except the
// last is half-open [low, high); the last also includes its upper edge, and
// out-of-range observations are clamped into the end bins so totals always
// match the number of observations.
struct Histogram {
  double lo = 0.0;
  double hi = 1.0;
  std::vector<std::size_t> malware;
  std::vector<std::size_t> benign;

  std::size_t bins() const { return malware.size(); }
  std::size_t bin_of(double value) const;
  double edge(std::size_t i) const;

  void add(double value, bool is_malware);
  void merge(const Histogram& other);  // shapes must match

  std::size_t malware_total() const;
  std::size_t benign_total() const;
};

Histogram make_histogram(double lo, double hi, std::size_t bins);

// One observation per section entropy.
void add_section_entropies(Histogram& h, const RawSample& sample);
// One observation per sample.
void add_imports_count(Histogram& h, const RawSample& sample);

// Rows are edge_low, edge_high, malware, benign; sep is ',' or '\t'.
std::string histogram_report(const Histogram& h, char sep);

}  // namespace peonto
