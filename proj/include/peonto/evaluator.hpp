#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "peonto/bitset.hpp"
#include "peonto/concepts.hpp"
#include "peonto/ontology.hpp"

namespace peonto {

// Raised by instance checking when a concept mentions a name the knowledge
// base and hierarchy know nothing about.
class EvalError : public std::runtime_error {
 public:
  enum class Kind { UnknownClass, UnknownProperty, UnknownIndividual };

  EvalError(Kind kind, std::string name)
      : std::runtime_error(describe(kind, name)), kind_(kind), name_(std::move(name)) {}

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }

 private:
  static std::string describe(Kind kind, const std::string& name);

  Kind kind_;
  std::string name_;
};

// Immutable query index over one knowledge base. Individuals get dense ids in
// sorted-name order; class extensions are precomputed with the hierarchy
// closure applied (an individual asserted as C belongs to every ancestor of
// C), and concepts evaluate to bitsets over the individual ids under
// closed-world semantics.
class KbIndex {
 public:
  KbIndex(const KnowledgeBase& kb, const ClassHierarchy& hierarchy);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& individuals() const { return names_; }

  bool has_individual(const std::string& name) const;
  std::size_t index_of(const std::string& name) const;

  // Extension of a class expression; throws EvalError on unknown names.
  Bitset evaluate(const Concept& c) const;

  bool instance_check(const Concept& c, const std::string& individual) const;

  // Bitset with exactly the named individuals set; unknown names throw.
  Bitset mask_of(const std::vector<std::string>& names) const;

  // Successor ids of one individual under an object property (empty when the
  // property is known but the individual has no links).
  const std::vector<std::uint32_t>& successors(const std::string& property,
                                               std::size_t individual) const;

  bool has_object_property(const std::string& property) const;
  bool has_data_property(const std::string& property) const;

  // Individuals that occur as objects of the property and are prototype ids
  // in the hierarchy; used as candidate fillers for value restrictions.
  std::vector<std::string> nominal_candidates(const std::string& property) const;

  const ClassHierarchy& hierarchy() const { return hierarchy_; }

 private:
  const ClassHierarchy& hierarchy_;
  std::vector<std::string> names_;
  std::map<std::string, std::uint32_t> ids_;
  std::map<std::string, Bitset> class_ext_;
  std::map<std::string, std::vector<std::vector<std::uint32_t>>> object_succ_;
  std::map<std::string, std::vector<std::vector<Literal>>> data_vals_;
};

}  // namespace peonto
