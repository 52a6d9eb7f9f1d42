#pragma once

#include <map>
#include <string>
#include <vector>

#include "peonto/concepts.hpp"
#include "peonto/evaluator.hpp"

namespace peonto {

struct RefinementConfig {
  bool use_negation = false;
  bool use_has_value = false;
  bool use_union = true;
  // Highest n generated in "min n" restrictions; 0 turns cardinalities off.
  unsigned cardinality_limit = 3;
};

// Downward refinement: every concept returned by refine() is subsumed by its
// argument on any knowledge base sharing the hierarchy. Specializations come
// from walking the class tree, adding conjuncts, refining restriction
// fillers, growing "min" bounds, shrinking "max" bounds and value sets, and
// dropping union members.
class RefinementOperator {
 public:
  RefinementOperator(const KbIndex& index, RefinementConfig config,
                     std::string domain = "PEFile");

  // One-step refinements of `c` with length at most max_length
  // (max_length <= 0 means unbounded).
  std::vector<ConceptPtr> refine(const ConceptPtr& c, int max_length = 0) const;

 private:
  std::vector<ConceptPtr> refine_in(const ConceptPtr& c, const std::string& ctx) const;
  const std::vector<ConceptPtr>& atoms(const std::string& ctx) const;
  const std::vector<std::string>& nominals(const std::string& property) const;
  std::vector<std::string> applicable_properties(const std::string& ctx) const;
  std::vector<std::string> leaves_below(const std::string& cls) const;
  void add_conjuncts(const ConceptPtr& c, const std::string& ctx,
                     std::vector<ConceptPtr>& out) const;

  const KbIndex& index_;
  RefinementConfig config_;
  std::string domain_;
  mutable std::map<std::string, std::vector<ConceptPtr>> atom_cache_;
  mutable std::map<std::string, std::vector<std::string>> nominal_cache_;
};

}  // namespace peonto
