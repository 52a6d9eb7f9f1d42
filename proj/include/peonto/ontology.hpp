#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include "peonto/actions.hpp"
#include "peonto/features.hpp"

namespace peonto {

inline constexpr const char* kDefaultBaseIri =
    "https://orbis-security.com/pe-malware-ontology#";

// Typed literal: integers stay integers, entropies stay doubles, names stay
// strings. Ordering is total so literals can live in sorted containers.
struct Literal {
  std::variant<std::int64_t, double, std::string> value;

  static Literal integer(std::int64_t v) { return {v}; }
  static Literal real(double v) { return {v}; }
  static Literal text(std::string v) { return {std::move(v)}; }

  bool is_integer() const { return value.index() == 0; }
  bool is_real() const { return value.index() == 1; }
  bool is_text() const { return value.index() == 2; }

  std::int64_t as_integer() const { return std::get<std::int64_t>(value); }
  double as_real() const { return std::get<double>(value); }
  const std::string& as_text() const { return std::get<std::string>(value); }

  // Numeric view for comparisons regardless of integer/double storage.
  double numeric() const {
    return is_integer() ? static_cast<double>(as_integer()) : as_real();
  }

  auto operator<=>(const Literal&) const = default;
};

// Turns an action id into its class name: "create-window" -> "CreateWindow".
std::string action_class_name(const std::string& action_id);

// The fixed taxonomy plus the vocabulary-driven action leaves. Single-parent
// tree rooted just below owl:Thing.
class ClassHierarchy {
 public:
  static ClassHierarchy standard(const ActionVocabulary& vocab);

  bool contains(const std::string& cls) const { return parent_.count(cls) != 0; }
  // Reflexive-transitive subclass test: is `sub` subsumed by `super`?
  bool subsumes(const std::string& super, const std::string& sub) const;
  const std::string& parent_of(const std::string& cls) const;
  const std::vector<std::string>& children_of(const std::string& cls) const;
  std::vector<std::string> descendants_of(const std::string& cls) const;  // incl. cls
  const std::vector<std::string>& roots() const { return roots_; }
  std::vector<std::string> all_classes() const;
  std::size_t class_count() const { return parent_.size(); }

  // Top-level families declared mutually disjoint.
  const std::vector<std::pair<std::string, std::string>>& disjoint_root_pairs() const {
    return disjoint_pairs_;
  }

  struct ObjectProperty {
    std::string name;
    std::string domain;
    std::string range;
  };
  enum class DataType { Integer, Real, Text };
  struct DataProperty {
    std::string name;
    std::string domain;
    DataType type;
  };

  const std::vector<ObjectProperty>& object_properties() const { return object_props_; }
  const std::vector<DataProperty>& data_properties() const { return data_props_; }
  bool is_object_property(const std::string& name) const;
  bool is_data_property(const std::string& name) const;
  const ObjectProperty* find_object_property(const std::string& name) const;

  // Prototype registry: one designated individual per feature / flag /
  // section-feature / leaf-action class.
  const std::map<std::string, std::string>& prototype_to_class() const {
    return proto_class_;
  }
  bool is_prototype_id(const std::string& individual) const {
    return proto_class_.count(individual) != 0;
  }
  // Class of a prototype id; empty string when unknown.
  std::string class_of_prototype(const std::string& individual) const;

 private:
  void add_class(const std::string& cls, const std::string& parent);
  void add_prototype(const std::string& id, const std::string& cls);

  std::map<std::string, std::string> parent_;
  std::map<std::string, std::vector<std::string>> children_;
  std::vector<std::string> roots_;
  std::vector<std::pair<std::string, std::string>> disjoint_pairs_;
  std::vector<ObjectProperty> object_props_;
  std::vector<DataProperty> data_props_;
  std::map<std::string, std::string> proto_class_;
};

// Assertion store. All names are local to the base IRI.
struct KnowledgeBase {
  std::string base_iri = kDefaultBaseIri;

  std::set<std::string> individuals;
  std::set<std::pair<std::string, std::string>> class_assertions;  // (indiv, class)
  std::set<std::tuple<std::string, std::string, std::string>> object_assertions;
  std::set<std::tuple<std::string, std::string, Literal>> data_assertions;
  std::set<std::pair<std::string, std::string>> disjoint_classes;  // sorted pairs
  std::set<std::tuple<std::string, std::string, std::string>> annotations;

  void merge(const KnowledgeBase& other);

  std::set<std::string> classes_of(const std::string& individual) const;
  std::vector<std::string> successors(const std::string& individual,
                                      const std::string& property) const;
  bool empty() const { return individuals.empty() && disjoint_classes.empty() &&
                               annotations.empty(); }
};

struct DatasetMetrics {
  std::size_t individuals = 0;
  std::size_t class_assertions = 0;
  std::size_t object_assertions = 0;
  std::size_t data_assertions = 0;
  std::size_t total_axioms = 0;
};

// Total axioms = assertions plus one declaration per individual.
DatasetMetrics dataset_metrics(const KnowledgeBase& kb);

struct IriScheme {
  std::string base = kDefaultBaseIri;
};

// Materializes one sample into an assertion fragment. `sample_local` is the
// local name for the sample individual (normally the md5; callers resolve
// collisions before building). Section individuals are named
// <normalized-name>_<sample_local>, with _2, _3... inserted for repeated
// names within the sample.
KnowledgeBase build_kb(const RawSample& sample, FileKind kind,
                       const std::set<FileFeature>& features,
                       const std::vector<SectionProfile>& sections,
                       const std::set<std::string>& actions,
                       const IriScheme& scheme,
                       const std::string& sample_local);

}  // namespace peonto
