#include "peonto/actions.hpp"

#include <algorithm>
#include <fstream>

namespace peonto {

std::string VocabularyError::format(Kind kind, const std::string& detail) {
  switch (kind) {
    case Kind::UnknownCategory: return "unknown action category: " + detail;
    case Kind::DuplicateApiEntry: return "duplicate api entry: " + detail;
    case Kind::MissingTable2Action: return "missing required extension action: " + detail;
    case Kind::BadDocument: return "bad vocabulary document: " + detail;
  }
  return detail;
}

const std::array<std::string_view, 17>& action_categories() {
  static const std::array<std::string_view, 17> kCategories = {
      "AccessManagement",
      "AntiDebugging",
      "Cryptography",
      "DirectoryHandling",
      "DiskManagement",
      "FileHandling",
      "InterProcessCommunication",
      "LibraryHandling",
      "Networking",
      "ProcessHandling",
      "RegistryHandling",
      "ResourceSharing",
      "ServiceHandling",
      "SynchronizationPrimitivesHandling",
      "SystemManipulation",
      "ThreadHandling",
      "WindowHandling",
  };
  return kCategories;
}

const std::array<std::string_view, 4>& required_extension_actions() {
  static const std::array<std::string_view, 4> kExtensions = {
      "decrypt",
      "encrypt",
      "generate-key",
      "send-http-request",
  };
  return kExtensions;
}

std::vector<std::string> ActionVocabulary::actions() const {
  std::vector<std::string> out;
  out.reserve(action_to_category.size());
  for (const auto& [id, _] : action_to_category) out.push_back(id);
  return out;
}

std::string canonicalize(const std::string& function_name, const ActionVocabulary& vocab) {
  if (vocab.api_to_action.count(function_name)) return function_name;
  if (function_name.size() > 1) {
    char last = function_name.back();
    if (last == 'A' || last == 'W') {
      std::string stripped = function_name.substr(0, function_name.size() - 1);
      if (vocab.api_to_action.count(stripped)) return stripped;
    }
  }
  return function_name;
}

std::set<std::string> map_imports(
    const std::map<std::string, std::vector<std::string>>& imports,
    const ActionVocabulary& vocab) {
  std::set<std::string> actions;
  for (const auto& [dll, functions] : imports) {
    (void)dll;  // import origin carries no signal here
    for (const auto& fn : functions) {
      auto it = vocab.api_to_action.find(canonicalize(fn, vocab));
      if (it != vocab.api_to_action.end()) actions.insert(it->second);
    }
  }
  return actions;
}

namespace {

void read_table(const nlohmann::json& doc, const char* name,
                std::map<std::string, std::string>& out, bool reject_duplicates) {
  auto it = doc.find(name);
  if (it == doc.end())
    throw VocabularyError(VocabularyError::Kind::BadDocument,
                          std::string("missing table '") + name + "'");
  if (it->is_object()) {
    for (auto e = it->begin(); e != it->end(); ++e) {
      if (!e.value().is_string())
        throw VocabularyError(VocabularyError::Kind::BadDocument,
                              std::string(name) + " values must be strings");
      out[e.key()] = e.value().get<std::string>();
    }
    return;
  }
  if (it->is_array()) {
    for (const auto& pair : *it) {
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() ||
          !pair[1].is_string())
        throw VocabularyError(VocabularyError::Kind::BadDocument,
                              std::string(name) + " entries must be [key, value] pairs");
      std::string key = pair[0].get<std::string>();
      if (reject_duplicates && out.count(key))
        throw VocabularyError(VocabularyError::Kind::DuplicateApiEntry, key);
      out[key] = pair[1].get<std::string>();
    }
    return;
  }
  throw VocabularyError(VocabularyError::Kind::BadDocument,
                        std::string("table '") + name + "' must be an object or array");
}

}  // namespace

ActionVocabulary load_vocabulary(const nlohmann::json& doc) {
  if (!doc.is_object())
    throw VocabularyError(VocabularyError::Kind::BadDocument, "not a JSON object");

  ActionVocabulary vocab;
  read_table(doc, "api_to_action", vocab.api_to_action, true);
  read_table(doc, "action_to_category", vocab.action_to_category, false);

  const auto& categories = action_categories();
  for (const auto& [action, category] : vocab.action_to_category) {
    if (std::find(categories.begin(), categories.end(), category) == categories.end())
      throw VocabularyError(VocabularyError::Kind::UnknownCategory,
                            action + " -> " + category);
  }
  for (const auto& [api, action] : vocab.api_to_action) {
    if (!vocab.has_action(action))
      throw VocabularyError(VocabularyError::Kind::UnknownCategory,
                            api + " -> " + action + " (action has no category)");
  }
  for (auto required : required_extension_actions()) {
    if (!vocab.has_action(std::string(required)))
      throw VocabularyError(VocabularyError::Kind::MissingTable2Action,
                            std::string(required));
  }
  return vocab;
}

ActionVocabulary load_vocabulary_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open vocabulary file: " + path);
  nlohmann::json doc = nlohmann::json::parse(in, nullptr, false);
  if (doc.is_discarded())
    throw VocabularyError(VocabularyError::Kind::BadDocument, "malformed JSON: " + path);
  return load_vocabulary(doc);
}

}  // namespace peonto
