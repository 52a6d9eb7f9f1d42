#include "peonto/ontology.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace peonto {

std::string action_class_name(const std::string& action_id) {
  std::string out;
  out.reserve(action_id.size());
  bool upper = true;
  for (char c : action_id) {
    if (c == '-') {
      upper = true;
      continue;
    }
    out.push_back(upper ? static_cast<char>(std::toupper(static_cast<unsigned char>(c)))
                        : c);
    upper = false;
  }
  return out;
}

void ClassHierarchy::add_class(const std::string& cls, const std::string& parent) {
  if (parent_.count(cls))
    throw std::invalid_argument("duplicate class in hierarchy: " + cls);
  parent_[cls] = parent;
  children_[cls];
  if (parent.empty())
    roots_.push_back(cls);
  else
    children_[parent].push_back(cls);
}

void ClassHierarchy::add_prototype(const std::string& id, const std::string& cls) {
  if (proto_class_.count(id))
    throw std::invalid_argument("duplicate prototype id: " + id);
  proto_class_[id] = cls;
}

ClassHierarchy ClassHierarchy::standard(const ActionVocabulary& vocab) {
  ClassHierarchy h;

  h.add_class("PEFile", "");
  h.add_class("ExecutableFile", "PEFile");
  h.add_class("DynamicLinkLibrary", "PEFile");

  h.add_class("Section", "");
  h.add_class("CodeSection", "Section");
  h.add_class("InitializedDataSection", "Section");
  h.add_class("UninitializedDataSection", "Section");

  h.add_class("FileFeature", "");
  for (FileFeature f : all_file_features()) {
    h.add_class(feature_class(f), "FileFeature");
    h.add_prototype(feature_id(f), feature_class(f));
  }

  h.add_class("SectionFeature", "");
  for (SectionFeature f : all_section_features()) {
    h.add_class(section_feature_class(f), "SectionFeature");
    h.add_prototype(section_feature_id(f), section_feature_class(f));
  }

  h.add_class("SectionFlag", "");
  for (SectionFlag f : all_section_flags()) {
    h.add_class(section_flag_class(f), "SectionFlag");
    h.add_prototype(section_flag_id(f), section_flag_class(f));
  }

  h.add_class("Action", "");
  for (auto category : action_categories()) h.add_class(std::string(category), "Action");
  for (const auto& [action, category] : vocab.action_to_category) {
    h.add_class(action_class_name(action), category);
    h.add_prototype(action, action_class_name(action));
  }

  for (auto& [cls, kids] : h.children_) std::sort(kids.begin(), kids.end());
  std::sort(h.roots_.begin(), h.roots_.end());

  for (std::size_t i = 0; i < h.roots_.size(); ++i)
    for (std::size_t j = i + 1; j < h.roots_.size(); ++j)
      h.disjoint_pairs_.emplace_back(h.roots_[i], h.roots_[j]);

  h.object_props_ = {
      {"has_section", "PEFile", "Section"},
      {"has_file_feature", "PEFile", "FileFeature"},
      {"has_action", "PEFile", "Action"},
      {"has_section_flag", "Section", "SectionFlag"},
      {"has_section_feature", "Section", "SectionFeature"},
  };
  h.data_props_ = {
      {"mz_count", "PEFile", DataType::Integer},
      {"exports_count", "PEFile", DataType::Integer},
      {"imports_count", "PEFile", DataType::Integer},
      {"symbols_count", "PEFile", DataType::Integer},
      {"path_strings_count", "PEFile", DataType::Integer},
      {"registry_strings_count", "PEFile", DataType::Integer},
      {"url_strings_count", "PEFile", DataType::Integer},
      {"section_name", "Section", DataType::Text},
      {"section_entropy", "Section", DataType::Real},
  };

  return h;
}

bool ClassHierarchy::subsumes(const std::string& super, const std::string& sub) const {
  std::string cur = sub;
  while (true) {
    if (cur == super) return true;
    auto it = parent_.find(cur);
    if (it == parent_.end() || it->second.empty()) return false;
    cur = it->second;
  }
}

const std::string& ClassHierarchy::parent_of(const std::string& cls) const {
  auto it = parent_.find(cls);
  if (it == parent_.end()) throw std::out_of_range("unknown class: " + cls);
  return it->second;
}

const std::vector<std::string>& ClassHierarchy::children_of(const std::string& cls) const {
  auto it = children_.find(cls);
  if (it == children_.end()) throw std::out_of_range("unknown class: " + cls);
  return it->second;
}

std::vector<std::string> ClassHierarchy::descendants_of(const std::string& cls) const {
  std::vector<std::string> out;
  std::vector<std::string> stack = {cls};
  while (!stack.empty()) {
    std::string cur = stack.back();
    stack.pop_back();
    out.push_back(cur);
    for (const auto& child : children_of(cur)) stack.push_back(child);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> ClassHierarchy::all_classes() const {
  std::vector<std::string> out;
  out.reserve(parent_.size());
  for (const auto& [cls, _] : parent_) out.push_back(cls);
  return out;
}

bool ClassHierarchy::is_object_property(const std::string& name) const {
  return find_object_property(name) != nullptr;
}

const ClassHierarchy::ObjectProperty* ClassHierarchy::find_object_property(
    const std::string& name) const {
  for (const auto& p : object_props_)
    if (p.name == name) return &p;
  return nullptr;
}

bool ClassHierarchy::is_data_property(const std::string& name) const {
  for (const auto& p : data_props_)
    if (p.name == name) return true;
  return false;
}

std::string ClassHierarchy::class_of_prototype(const std::string& individual) const {
  auto it = proto_class_.find(individual);
  return it == proto_class_.end() ? std::string() : it->second;
}

void KnowledgeBase::merge(const KnowledgeBase& other) {
  individuals.insert(other.individuals.begin(), other.individuals.end());
  class_assertions.insert(other.class_assertions.begin(), other.class_assertions.end());
  object_assertions.insert(other.object_assertions.begin(),
                           other.object_assertions.end());
  data_assertions.insert(other.data_assertions.begin(), other.data_assertions.end());
  disjoint_classes.insert(other.disjoint_classes.begin(), other.disjoint_classes.end());
  annotations.insert(other.annotations.begin(), other.annotations.end());
}

std::set<std::string> KnowledgeBase::classes_of(const std::string& individual) const {
  std::set<std::string> out;
  for (auto it = class_assertions.lower_bound({individual, ""});
       it != class_assertions.end() && it->first == individual; ++it)
    out.insert(it->second);
  return out;
}

std::vector<std::string> KnowledgeBase::successors(const std::string& individual,
                                                   const std::string& property) const {
  std::vector<std::string> out;
  for (auto it = object_assertions.lower_bound({individual, property, ""});
       it != object_assertions.end() && std::get<0>(*it) == individual &&
       std::get<1>(*it) == property;
       ++it)
    out.push_back(std::get<2>(*it));
  return out;
}

DatasetMetrics dataset_metrics(const KnowledgeBase& kb) {
  DatasetMetrics m;
  m.individuals = kb.individuals.size();
  m.class_assertions = kb.class_assertions.size();
  m.object_assertions = kb.object_assertions.size();
  m.data_assertions = kb.data_assertions.size();
  m.total_axioms =
      m.class_assertions + m.object_assertions + m.data_assertions + m.individuals;
  return m;
}

namespace {

void assert_prototype(KnowledgeBase& kb, const std::string& id, const std::string& cls) {
  kb.individuals.insert(id);
  kb.class_assertions.insert({id, cls});
}

// IRI-safe section name: lowercase, leading dots stripped, anything outside
// [a-z0-9] turned into '_', empty names become "sec".
std::string section_local_base(const std::string& name) {
  std::string norm = normalize_section_name(name);
  for (char& c : norm)
    if (!(std::islower(static_cast<unsigned char>(c)) ||
          std::isdigit(static_cast<unsigned char>(c))))
      c = '_';
  if (norm.empty()) norm = "sec";
  return norm;
}

}  // namespace

KnowledgeBase build_kb(const RawSample& sample, FileKind kind,
                       const std::set<FileFeature>& features,
                       const std::vector<SectionProfile>& sections,
                       const std::set<std::string>& actions,
                       const IriScheme& scheme,
                       const std::string& sample_local) {
  KnowledgeBase kb;
  kb.base_iri = scheme.base;

  kb.individuals.insert(sample_local);
  kb.class_assertions.insert(
      {sample_local, kind == FileKind::DynamicLinkLibrary ? "DynamicLinkLibrary"
                                                          : "ExecutableFile"});

  kb.data_assertions.insert({sample_local, "exports_count",
                             Literal::integer(static_cast<std::int64_t>(
                                 sample.general.exports_count))});
  kb.data_assertions.insert({sample_local, "imports_count",
                             Literal::integer(static_cast<std::int64_t>(
                                 sample.general.imports_count))});
  kb.data_assertions.insert({sample_local, "symbols_count",
                             Literal::integer(static_cast<std::int64_t>(
                                 sample.general.symbols_count))});
  if (sample.strings) {
    kb.data_assertions.insert({sample_local, "mz_count",
                               Literal::integer(static_cast<std::int64_t>(
                                   sample.strings->mz_count))});
    kb.data_assertions.insert({sample_local, "path_strings_count",
                               Literal::integer(static_cast<std::int64_t>(
                                   sample.strings->paths_count))});
    kb.data_assertions.insert({sample_local, "registry_strings_count",
                               Literal::integer(static_cast<std::int64_t>(
                                   sample.strings->registry_count))});
    kb.data_assertions.insert({sample_local, "url_strings_count",
                               Literal::integer(static_cast<std::int64_t>(
                                   sample.strings->urls_count))});
  }

  for (FileFeature f : features) {
    kb.object_assertions.insert({sample_local, "has_file_feature", feature_id(f)});
    assert_prototype(kb, feature_id(f), feature_class(f));
  }
  for (const auto& action : actions) {
    kb.object_assertions.insert({sample_local, "has_action", action});
    assert_prototype(kb, action, action_class_name(action));
  }

  std::map<std::string, int> name_uses;
  for (const auto& sec : sections) {
    std::string norm = section_local_base(sec.name);
    int n = ++name_uses[norm];
    std::string local = norm;
    if (n > 1) local += "_" + std::to_string(n);
    local += "_" + sample_local;

    kb.individuals.insert(local);
    if (sec.kinds.empty()) {
      kb.class_assertions.insert({local, "Section"});
    } else {
      for (SectionKind k : sec.kinds)
        kb.class_assertions.insert({local, section_kind_class(k)});
    }

    kb.data_assertions.insert({local, "section_name", Literal::text(norm)});
    kb.data_assertions.insert({local, "section_entropy", Literal::real(sec.entropy)});

    for (SectionFlag fl : sec.flags) {
      kb.object_assertions.insert({local, "has_section_flag", section_flag_id(fl)});
      assert_prototype(kb, section_flag_id(fl), section_flag_class(fl));
    }
    for (SectionFeature sf : sec.features) {
      kb.object_assertions.insert(
          {local, "has_section_feature", section_feature_id(sf)});
      assert_prototype(kb, section_feature_id(sf), section_feature_class(sf));
    }

    kb.object_assertions.insert({sample_local, "has_section", local});
  }

  return kb;
}

}  // namespace peonto
