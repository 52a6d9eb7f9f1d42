#pragma once

#include <string>
#include <vector>

#include "peonto/actions.hpp"
#include "peonto/features.hpp"
#include "peonto/ontology.hpp"

namespace peonto {

struct ConvertOptions {
  Thresholds thresholds;
  // Falls back to the built-in vocabulary when null.
  const ActionVocabulary* vocabulary = nullptr;
  IriScheme iri;
  bool with_disjointness = false;
  bool with_derived_annotations = false;
  unsigned workers = 1;
};

struct ConvertStats {
  std::size_t samples = 0;
  std::size_t renamed_iris = 0;
  std::vector<std::string> warnings;
  DatasetMetrics metrics;
};

struct Materialized {
  KnowledgeBase kb;
  ConvertStats stats;
};

// Builds the assertion store for a whole dataset: every sample is classified,
// its features and actions derived, and the per-sample fragments merged in
// input order. Samples repeating an earlier md5 get _2, _3... suffixed local
// names plus a warning.
Materialized materialize(const std::vector<RawSample>& samples,
                         const ConvertOptions& options);

// derived_as explanation strings keyed by prototype id, reflecting the
// configured thresholds. Covers the features computed from other values, not
// the ones read directly from the record.
std::vector<std::pair<std::string, std::string>> derived_feature_notes(
    const Thresholds& thresholds);

}  // namespace peonto
