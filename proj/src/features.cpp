#include "peonto/features.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace peonto {

std::set<std::string> Thresholds::default_standard_section_names() {
  return {"text", "code",  "data", "rdata", "idata", "edata", "pdata",
          "rsrc", "reloc", "bss",  "tls",   "crt",   "debug"};
}

void Thresholds::validate() const {
  if (imports_threshold == 0)
    throw std::invalid_argument("imports threshold must be positive");
  if (!(entropy_threshold > 0.0) || !(entropy_threshold < 8.0))
    throw std::invalid_argument("entropy threshold must lie in (0, 8)");
}

FileKind classify_file_kind(const RawSample& sample) {
  for (const auto& token : sample.coff_characteristics) {
    if (token == "DLL") return FileKind::DynamicLinkLibrary;
    if (token.size() >= 4 && token.compare(token.size() - 4, 4, "_DLL") == 0)
      return FileKind::DynamicLinkLibrary;
  }
  return FileKind::ExecutableFile;
}

std::string normalize_section_name(const std::string& name) {
  std::size_t start = 0;
  while (start < name.size() && name[start] == '.') ++start;
  std::string out;
  out.reserve(name.size() - start);
  for (std::size_t i = start; i < name.size(); ++i)
    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(name[i]))));
  return out;
}

namespace {

bool has_prop(const RawSection& s, const char* token) {
  return std::find(s.props.begin(), s.props.end(), token) != s.props.end();
}

}  // namespace

SectionDerivation derive_sections(const RawSample& sample, const Thresholds& thresholds) {
  SectionDerivation out;
  out.profiles.reserve(sample.sections.size());

  for (const auto& raw : sample.sections) {
    SectionProfile p;
    p.name = raw.name;
    p.entropy = raw.entropy;

    if (has_prop(raw, "CNT_CODE")) p.kinds.insert(SectionKind::Code);
    if (has_prop(raw, "CNT_INITIALIZED_DATA")) p.kinds.insert(SectionKind::InitializedData);
    if (has_prop(raw, "CNT_UNINITIALIZED_DATA"))
      p.kinds.insert(SectionKind::UninitializedData);

    if (has_prop(raw, "MEM_EXECUTE")) p.flags.insert(SectionFlag::Executable);
    if (has_prop(raw, "MEM_READ")) p.flags.insert(SectionFlag::Readable);
    if (has_prop(raw, "MEM_WRITE")) p.flags.insert(SectionFlag::Writable);
    if (has_prop(raw, "MEM_SHARED")) p.flags.insert(SectionFlag::Shareable);

    if (p.entropy > thresholds.entropy_threshold)
      p.features.insert(SectionFeature::HighEntropy);
    if (!thresholds.standard_section_names.count(normalize_section_name(p.name)))
      p.features.insert(SectionFeature::NonstandardSectionName);
    if (p.flags.count(SectionFlag::Writable) && p.flags.count(SectionFlag::Executable))
      p.features.insert(SectionFeature::WriteExecuteSection);

    out.profiles.push_back(std::move(p));
  }

  out.entry = EntryExecutability::Unknown;
  for (std::size_t i = 0; i < sample.sections.size(); ++i) {
    if (sample.sections[i].name == sample.entry_section_name) {
      out.entry = out.profiles[i].flags.count(SectionFlag::Executable)
                      ? EntryExecutability::Executable
                      : EntryExecutability::NonExecutable;
      break;
    }
  }
  return out;
}

std::set<FileFeature> derive_file_features(const RawSample& sample,
                                           EntryExecutability entry,
                                           const Thresholds& thresholds) {
  std::set<FileFeature> feats;

  if (sample.general.has_debug) feats.insert(FileFeature::Debug);
  if (sample.general.has_relocations) feats.insert(FileFeature::Relocations);
  if (sample.general.has_resources) feats.insert(FileFeature::Resources);
  if (sample.general.has_signature) feats.insert(FileFeature::Signature);
  if (sample.general.has_tls) feats.insert(FileFeature::Tls);

  for (const auto& dir : sample.datadirectories) {
    std::string upper = dir.name;
    std::transform(upper.begin(), upper.end(), upper.begin(),
                   [](unsigned char c) { return std::toupper(c); });
    if (upper == "CLR_RUNTIME_HEADER" &&
        (dir.virtual_address != 0 || dir.size.value_or(0) != 0)) {
      feats.insert(FileFeature::Clr);
      break;
    }
  }

  // Unknown entry sections assert nothing: absence of evidence is not a
  // non-executable entry point.
  if (entry == EntryExecutability::NonExecutable)
    feats.insert(FileFeature::NonexecutableEntryPoint);

  if (sample.general.exports_count > 0) feats.insert(FileFeature::Exports);

  std::size_t executable_sections = 0;
  for (const auto& s : sample.sections)
    if (has_prop(s, "MEM_EXECUTE")) ++executable_sections;
  if (executable_sections >= 2) feats.insert(FileFeature::MultipleExecutableSections);

  if (sample.general.imports_count < thresholds.imports_threshold)
    feats.insert(FileFeature::LowImportsCount);

  if (sample.general.symbols_count > 0) feats.insert(FileFeature::Symbols);

  // String-derived features only apply when the record carries string
  // statistics at all.
  if (sample.strings) {
    const StringStats& st = *sample.strings;
    bool nonstandard_mz = thresholds.mz_rule == MzRule::Prose ? st.mz_count != 1
                                                              : st.mz_count > 1;
    if (nonstandard_mz) feats.insert(FileFeature::NonstandardMz);
    if (st.paths_count > 0) feats.insert(FileFeature::PathStrings);
    if (st.registry_count > 0) feats.insert(FileFeature::RegistryStrings);
    if (st.urls_count > 0) feats.insert(FileFeature::UrlStrings);
  }

  return feats;
}

namespace {

struct FeatureNames {
  FileFeature feature;
  const char* id;
  const char* cls;
};

const FeatureNames kFileFeatureNames[] = {
    {FileFeature::Debug, "debug", "Debug"},
    {FileFeature::Relocations, "relocations", "Relocations"},
    {FileFeature::Resources, "resources", "Resources"},
    {FileFeature::Signature, "signature", "Signature"},
    {FileFeature::Tls, "tls", "TLS"},
    {FileFeature::Clr, "clr", "CLR"},
    {FileFeature::NonexecutableEntryPoint, "nonexecutable_entry_point",
     "NonexecutableEntryPoint"},
    {FileFeature::Exports, "exports", "Exports"},
    {FileFeature::MultipleExecutableSections, "multiple_executable_sections",
     "MultipleExecutableSections"},
    {FileFeature::LowImportsCount, "low_imports_count", "LowImportsCount"},
    {FileFeature::NonstandardMz, "nonstandard_mz", "NonstandardMZ"},
    {FileFeature::PathStrings, "path_strings", "PathStrings"},
    {FileFeature::RegistryStrings, "registry_strings", "RegistryStrings"},
    {FileFeature::Symbols, "symbols", "Symbols"},
    {FileFeature::UrlStrings, "url_strings", "URLStrings"},
};

}  // namespace

const std::string& feature_id(FileFeature f) {
  static const auto* table = [] {
    auto* m = new std::map<FileFeature, std::string>;
    for (const auto& e : kFileFeatureNames) (*m)[e.feature] = e.id;
    return m;
  }();
  return table->at(f);
}

const std::string& feature_class(FileFeature f) {
  static const auto* table = [] {
    auto* m = new std::map<FileFeature, std::string>;
    for (const auto& e : kFileFeatureNames) (*m)[e.feature] = e.cls;
    return m;
  }();
  return table->at(f);
}

const std::string& section_kind_class(SectionKind k) {
  static const std::map<SectionKind, std::string> table = {
      {SectionKind::Code, "CodeSection"},
      {SectionKind::InitializedData, "InitializedDataSection"},
      {SectionKind::UninitializedData, "UninitializedDataSection"},
  };
  return table.at(k);
}

const std::string& section_flag_id(SectionFlag f) {
  static const std::map<SectionFlag, std::string> table = {
      {SectionFlag::Executable, "executable"},
      {SectionFlag::Readable, "readable"},
      {SectionFlag::Writable, "writable"},
      {SectionFlag::Shareable, "shareable"},
  };
  return table.at(f);
}

const std::string& section_flag_class(SectionFlag f) {
  static const std::map<SectionFlag, std::string> table = {
      {SectionFlag::Executable, "Executable"},
      {SectionFlag::Readable, "Readable"},
      {SectionFlag::Writable, "Writable"},
      {SectionFlag::Shareable, "Shareable"},
  };
  return table.at(f);
}

const std::string& section_feature_id(SectionFeature f) {
  static const std::map<SectionFeature, std::string> table = {
      {SectionFeature::HighEntropy, "high_entropy"},
      {SectionFeature::NonstandardSectionName, "nonstandard_section_name"},
      {SectionFeature::WriteExecuteSection, "write_execute_section"},
  };
  return table.at(f);
}

const std::string& section_feature_class(SectionFeature f) {
  static const std::map<SectionFeature, std::string> table = {
      {SectionFeature::HighEntropy, "HighEntropy"},
      {SectionFeature::NonstandardSectionName, "NonstandardSectionName"},
      {SectionFeature::WriteExecuteSection, "WriteExecuteSection"},
  };
  return table.at(f);
}

std::vector<FileFeature> all_file_features() {
  std::vector<FileFeature> out;
  for (const auto& e : kFileFeatureNames) out.push_back(e.feature);
  return out;
}

std::vector<SectionFlag> all_section_flags() {
  return {SectionFlag::Executable, SectionFlag::Readable, SectionFlag::Writable,
          SectionFlag::Shareable};
}

std::vector<SectionFeature> all_section_features() {
  return {SectionFeature::HighEntropy, SectionFeature::NonstandardSectionName,
          SectionFeature::WriteExecuteSection};
}

}  // namespace peonto
