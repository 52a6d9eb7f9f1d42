#include "peonto/stats.hpp"

#include <stdexcept>
#include <string>

#include "doctest.h"

using namespace peonto;

namespace {

RawSample labeled_sample(int label) {
  RawSample s;
  s.md5 = std::string(32, 'c');
  s.label = label;
  return s;
}

}  // namespace

TEST_CASE("histogram construction validates its shape") {
  CHECK_THROWS_AS(make_histogram(1.0, 1.0, 4), std::invalid_argument);
  CHECK_THROWS_AS(make_histogram(2.0, 1.0, 4), std::invalid_argument);
  CHECK_THROWS_AS(make_histogram(0.0, 1.0, 0), std::invalid_argument);

  Histogram h = make_histogram(0.0, 8.0, 16);
  CHECK(h.bins() == 16);
  CHECK(h.malware_total() == 0);
  CHECK(h.benign_total() == 0);
}

TEST_CASE("bins are half-open with clamped ends") {
  Histogram h = make_histogram(0.0, 8.0, 16);

  CHECK(h.bin_of(-3.0) == 0);
  CHECK(h.bin_of(0.0) == 0);
  CHECK(h.bin_of(0.4999) == 0);
  CHECK(h.bin_of(0.5) == 1);
  CHECK(h.bin_of(7.0) == 14);
  CHECK(h.bin_of(7.9999) == 15);
  CHECK(h.bin_of(8.0) == 15);
  CHECK(h.bin_of(100.0) == 15);

  CHECK(h.edge(0) == 0.0);
  CHECK(h.edge(1) == 0.5);
  CHECK(h.edge(16) == 8.0);

  h.add(-3.0, true);
  h.add(8.0, true);
  h.add(100.0, false);
  CHECK(h.malware[0] == 1);
  CHECK(h.malware[15] == 1);
  CHECK(h.benign[15] == 1);
  CHECK(h.malware_total() == 2);
  CHECK(h.benign_total() == 1);
}

TEST_CASE("entropy observations come one per section") {
  Histogram h = make_histogram(0.0, 8.0, 8);

  RawSample mal = labeled_sample(1);
  mal.sections = {{"CODE", 6.5, {}}, {".data", 3.0, {}}, {".rsrc", 7.9, {}}};
  add_section_entropies(h, mal);
  CHECK(h.malware_total() == 3);
  CHECK(h.malware[6] == 1);
  CHECK(h.malware[3] == 1);
  CHECK(h.malware[7] == 1);

  RawSample ben = labeled_sample(0);
  ben.sections = {{"CODE", 1.0, {}}};
  add_section_entropies(h, ben);
  CHECK(h.benign_total() == 1);

  RawSample unlabeled = labeled_sample(-1);
  unlabeled.sections = {{"CODE", 5.0, {}}};
  add_section_entropies(h, unlabeled);
  CHECK(h.malware_total() == 3);
  CHECK(h.benign_total() == 1);
}

TEST_CASE("import observations come one per sample") {
  Histogram h = make_histogram(0.0, 64.0, 8);

  RawSample mal = labeled_sample(1);
  mal.general.imports_count = 17;
  add_imports_count(h, mal);
  CHECK(h.malware[2] == 1);

  RawSample big = labeled_sample(0);
  big.general.imports_count = 5000;
  add_imports_count(h, big);
  CHECK(h.benign[7] == 1);

  RawSample unlabeled = labeled_sample(-1);
  unlabeled.general.imports_count = 9;
  add_imports_count(h, unlabeled);
  CHECK(h.malware_total() + h.benign_total() == 2);
}

TEST_CASE("merging adds counts and rejects shape mismatches") {
  Histogram a = make_histogram(0.0, 8.0, 4);
  Histogram b = make_histogram(0.0, 8.0, 4);
  a.add(1.0, true);
  a.add(3.0, false);
  b.add(1.5, true);
  b.add(7.0, true);

  a.merge(b);
  CHECK(a.malware == std::vector<std::size_t>{2, 0, 0, 1});
  CHECK(a.benign == std::vector<std::size_t>{0, 1, 0, 0});

  Histogram narrow = make_histogram(0.0, 4.0, 4);
  CHECK_THROWS_AS(a.merge(narrow), std::invalid_argument);
  Histogram coarse = make_histogram(0.0, 8.0, 2);
  CHECK_THROWS_AS(a.merge(coarse), std::invalid_argument);
}

TEST_CASE("reports list edges and per-label counts") {
  Histogram h = make_histogram(0.0, 1.0, 2);
  h.add(0.25, true);
  h.add(0.75, false);
  h.add(2.0, false);

  CHECK(histogram_report(h, ',') ==
        "edge_low,edge_high,malware,benign\n"
        "0,0.5,1,0\n"
        "0.5,1,0,2\n");
  CHECK(histogram_report(h, '\t') ==
        "edge_low\tedge_high\tmalware\tbenign\n"
        "0\t0.5\t1\t0\n"
        "0.5\t1\t0\t2\n");
}
