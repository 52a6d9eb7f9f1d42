#pragma once

#include <set>
#include <string>
#include <vector>

#include "peonto/ember.hpp"

namespace peonto {

enum class FileKind { ExecutableFile, DynamicLinkLibrary };

enum class FileFeature {
  Debug,
  Relocations,
  Resources,
  Signature,
  Tls,
  Clr,
  NonexecutableEntryPoint,
  Exports,
  MultipleExecutableSections,
  LowImportsCount,
  NonstandardMz,
  PathStrings,
  RegistryStrings,
  Symbols,
  UrlStrings,
};

enum class SectionKind { Code, InitializedData, UninitializedData };
enum class SectionFlag { Executable, Readable, Writable, Shareable };
enum class SectionFeature { HighEntropy, NonstandardSectionName, WriteExecuteSection };

// Which reading of the MZ-count feature applies: the running-text definition
// (any count other than one) or the stricter annotated one (more than one).
enum class MzRule { Prose, Annotation };

struct Thresholds {
  std::uint64_t imports_threshold = 10;   // strictly-below counts as low
  double entropy_threshold = 7.0;         // strictly-above counts as high
  MzRule mz_rule = MzRule::Prose;
  std::set<std::string> standard_section_names = default_standard_section_names();

  static std::set<std::string> default_standard_section_names();
  void validate() const;  // throws std::invalid_argument when out of range
};

// DLL iff any COFF characteristics token is "DLL" or ends with "_DLL";
// everything else (including an empty token list) is a plain executable.
FileKind classify_file_kind(const RawSample& sample);

enum class EntryExecutability { Executable, NonExecutable, Unknown };

struct SectionProfile {
  std::string name;
  double entropy = 0.0;
  std::set<SectionKind> kinds;        // empty: untyped section
  std::set<SectionFlag> flags;
  std::set<SectionFeature> features;
};

struct SectionDerivation {
  std::vector<SectionProfile> profiles;  // input order preserved
  EntryExecutability entry = EntryExecutability::Unknown;
};

SectionDerivation derive_sections(const RawSample& sample, const Thresholds& thresholds);

std::set<FileFeature> derive_file_features(const RawSample& sample,
                                           EntryExecutability entry,
                                           const Thresholds& thresholds);

// Lowercases and strips leading dots; used both for the standard-name check
// and for section individual naming.
std::string normalize_section_name(const std::string& name);

// Identifier/class-name tables shared with the ontology vocabulary.
const std::string& feature_id(FileFeature f);          // e.g. "nonstandard_mz"
const std::string& feature_class(FileFeature f);       // e.g. "NonstandardMZ"
const std::string& section_kind_class(SectionKind k);  // e.g. "CodeSection"
const std::string& section_flag_id(SectionFlag f);     // e.g. "executable"
const std::string& section_flag_class(SectionFlag f);  // e.g. "Executable"
const std::string& section_feature_id(SectionFeature f);
const std::string& section_feature_class(SectionFeature f);

std::vector<FileFeature> all_file_features();
std::vector<SectionFlag> all_section_flags();
std::vector<SectionFeature> all_section_features();

}  // namespace peonto
