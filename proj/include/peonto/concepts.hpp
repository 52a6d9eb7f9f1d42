#pragma once

#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace peonto {

// Class-expression tree. Nodes are immutable and shared; construction
// canonicalizes n-ary intersections/unions (flattened, deduplicated, sorted)
// so structurally equal expressions render identically.
class Concept;
using ConceptPtr = std::shared_ptr<const Concept>;

enum class CardinalityOp { AtLeast, AtMost, Exactly };
enum class DataOp { Less, LessEq, Greater, GreaterEq, Equal };

class Concept {
 public:
  enum class Kind {
    Top,
    Bottom,
    Named,
    Not,
    And,
    Or,
    Exists,
    ForAll,
    HasValue,      // property with a set of admissible target individuals
    Cardinality,
    DataCompare,   // numeric restriction on a data property
    DataNotIn,     // string-valued property outside an enumerated set
  };

  Kind kind;
  std::string name;                     // class (Named) or property name
  std::vector<ConceptPtr> children;     // Not/Exists/ForAll/Cardinality: 1; And/Or: >=2
  std::vector<std::string> values;      // HasValue individuals / DataNotIn strings
  CardinalityOp card_op = CardinalityOp::AtLeast;
  unsigned card_n = 0;
  DataOp data_op = DataOp::Less;
  double data_value = 0.0;
  bool data_integer = false;            // render the bound as an integer

  static ConceptPtr top();
  static ConceptPtr bottom();
  static ConceptPtr named(std::string cls);
  static ConceptPtr negation(ConceptPtr c);
  static ConceptPtr intersection(std::vector<ConceptPtr> members);
  static ConceptPtr union_of(std::vector<ConceptPtr> members);
  static ConceptPtr exists(std::string property, ConceptPtr filler);
  static ConceptPtr for_all(std::string property, ConceptPtr filler);
  static ConceptPtr has_value(std::string property, std::vector<std::string> individuals);
  static ConceptPtr cardinality(CardinalityOp op, unsigned n, std::string property,
                                ConceptPtr filler);
  static ConceptPtr data_compare(std::string property, DataOp op, double value,
                                 bool integer_bound);
  static ConceptPtr data_not_in(std::string property, std::vector<std::string> strings);
};

// Number of named classes, properties, individuals and constructors.
// length(Thing) = 1, length(Named) = 1, length(some p C) = 2 + length(C),
// length(A and B) = length(A) + 1 + length(B).
int concept_length(const Concept& c);
inline int concept_length(const ConceptPtr& c) { return concept_length(*c); }

// Deterministic Manchester-style text, e.g.
// "ExecutableFile and (has_file_feature value nonstandard_mz)".
std::string render_concept(const Concept& c);
inline std::string render_concept(const ConceptPtr& c) { return render_concept(*c); }

class ConceptParseError : public std::runtime_error {
 public:
  ConceptParseError(std::size_t position, const std::string& msg)
      : std::runtime_error("concept: offset " + std::to_string(position) + ": " + msg),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Inverse of render_concept (accepts the same Manchester subset).
ConceptPtr parse_concept(std::string_view text);

}  // namespace peonto
