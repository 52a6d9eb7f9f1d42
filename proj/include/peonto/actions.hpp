#pragma once

#include <array>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace peonto {

class VocabularyError : public std::runtime_error {
 public:
  enum class Kind { UnknownCategory, DuplicateApiEntry, MissingTable2Action, BadDocument };

  VocabularyError(Kind kind, std::string detail)
      : std::runtime_error(format(kind, detail)), kind_(kind), detail_(std::move(detail)) {}

  Kind kind() const { return kind_; }
  const std::string& detail() const { return detail_; }

 private:
  static std::string format(Kind kind, const std::string& detail);
  Kind kind_;
  std::string detail_;
};

// The fixed action category set. Every action id maps into exactly one of these.
const std::array<std::string_view, 17>& action_categories();

// Behavioural extensions that every vocabulary must define.
const std::array<std::string_view, 4>& required_extension_actions();

struct ActionVocabulary {
  std::map<std::string, std::string> api_to_action;
  std::map<std::string, std::string> action_to_category;

  bool has_action(const std::string& id) const {
    return action_to_category.count(id) != 0;
  }

  // Sorted list of all action ids.
  std::vector<std::string> actions() const;
};

// Exact table lookup first; otherwise a single trailing 'A' or 'W' is stripped
// when the stripped form is a table key. Anything else is returned unchanged.
std::string canonicalize(const std::string& function_name, const ActionVocabulary& vocab);

// Maps every imported function of every DLL through the vocabulary; functions
// without a table entry are dropped. Result is a set: one action id per
// behaviour no matter how many imports triggered it.
std::set<std::string> map_imports(
    const std::map<std::string, std::vector<std::string>>& imports,
    const ActionVocabulary& vocab);

// Validates and assembles a vocabulary from a config document of the form
// {"api_to_action": {...}, "action_to_category": {...}}. Either table may also
// be given as an array of [key, value] pairs.
ActionVocabulary load_vocabulary(const nlohmann::json& doc);
ActionVocabulary load_vocabulary_file(const std::string& path);

// Built-in curated table (139 actions across all 17 categories).
const ActionVocabulary& default_vocabulary();

}  // namespace peonto
