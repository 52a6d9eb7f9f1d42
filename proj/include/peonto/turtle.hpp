#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "peonto/ontology.hpp"

namespace peonto {

class TurtleError : public std::runtime_error {
 public:
  enum class Kind { Syntax, UnknownPrefix };

  TurtleError(Kind kind, std::size_t line, std::size_t column, const std::string& msg)
      : std::runtime_error("turtle: line " + std::to_string(line) + ", col " +
                           std::to_string(column) + ": " + msg),
        kind_(kind),
        line_(line),
        column_(column) {}

  Kind kind() const { return kind_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  Kind kind_;
  std::size_t line_;
  std::size_t column_;
};

// Canonical serialization: prefix block, disjointness axioms, annotation
// assertions, prototype individuals, then samples in md5 order each followed
// by its sections. Output is byte-stable for equal knowledge bases.
std::string emit_turtle(const KnowledgeBase& kb, const ClassHierarchy& hierarchy);

// Reads documents produced by emit_turtle (prefix directives, rdf:type with
// object lists, predicate-object lists, typed literals). Not a general
// Turtle parser.
KnowledgeBase parse_turtle(std::string_view text, const ClassHierarchy& hierarchy);

}  // namespace peonto
