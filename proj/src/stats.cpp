#include "peonto/stats.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace peonto {

Histogram make_histogram(double lo, double hi, std::size_t bins) {
  if (!(lo < hi)) throw std::invalid_argument("histogram range is empty");
  if (bins == 0) throw std::invalid_argument("histogram needs at least one bin");
  Histogram h;
  h.lo = lo;
  h.hi = hi;
  h.malware.assign(bins, 0);
  h.benign.assign(bins, 0);
  return h;
}

std::size_t Histogram::bin_of(double value) const {
  if (value < lo) return 0;
  if (value >= hi) return bins() - 1;
  auto idx = static_cast<std::size_t>((value - lo) / (hi - lo) *
                                      static_cast<double>(bins()));
  return idx >= bins() ? bins() - 1 : idx;
}

double Histogram::edge(std::size_t i) const {
  return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(bins());
}

void Histogram::add(double value, bool is_malware) {
  (is_malware ? malware : benign)[bin_of(value)]++;
}

void Histogram::merge(const Histogram& other) {
  if (lo != other.lo || hi != other.hi || bins() != other.bins())
    throw std::invalid_argument("histogram shapes differ");
  for (std::size_t i = 0; i < bins(); ++i) {
    malware[i] += other.malware[i];
    benign[i] += other.benign[i];
  }
}

std::size_t Histogram::malware_total() const {
  std::size_t n = 0;
  for (auto c : malware) n += c;
  return n;
}

std::size_t Histogram::benign_total() const {
  std::size_t n = 0;
  for (auto c : benign) n += c;
  return n;
}

void add_section_entropies(Histogram& h, const RawSample& sample) {
  if (!sample.labeled()) return;
  for (const auto& section : sample.sections)
    h.add(section.entropy, sample.malware());
}

void add_imports_count(Histogram& h, const RawSample& sample) {
  if (!sample.labeled()) return;
  h.add(static_cast<double>(sample.general.imports_count), sample.malware());
}

namespace {

std::string number_text(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

}  // namespace

std::string histogram_report(const Histogram& h, char sep) {
  std::string out = "edge_low";
  out += sep;
  out += "edge_high";
  out += sep;
  out += "malware";
  out += sep;
  out += "benign\n";
  for (std::size_t i = 0; i < h.bins(); ++i) {
    out += number_text(h.edge(i));
    out += sep;
    out += number_text(i + 1 == h.bins() ? h.hi : h.edge(i + 1));
    out += sep;
    out += std::to_string(h.malware[i]);
    out += sep;
    out += std::to_string(h.benign[i]);
    out += '\n';
  }
  return out;
}

}  // namespace peonto
