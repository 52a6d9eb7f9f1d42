#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace peonto {

// Scalar counters reported by the static analyzer for the whole file.
struct GeneralInfo {
  std::uint64_t exports_count = 0;
  std::uint64_t imports_count = 0;
  std::uint64_t symbols_count = 0;
  bool has_debug = false;
  bool has_relocations = false;
  bool has_resources = false;
  bool has_signature = false;
  bool has_tls = false;
};

// Printable-string statistics. Absent in SOREL-style records.
struct StringStats {
  std::uint64_t paths_count = 0;
  std::uint64_t urls_count = 0;
  std::uint64_t registry_count = 0;
  std::uint64_t mz_count = 0;
};

struct RawSection {
  std::string name;
  double entropy = 0.0;
  std::vector<std::string> props;
};

struct DataDirectory {
  std::string name;
  std::uint64_t virtual_address = 0;
  std::optional<std::uint64_t> size;
};

struct RawSample {
  std::string sha256;
  std::string md5;
  int label = 0;  // -1 unlabeled, 0 benign, 1 malware
  std::optional<std::string> avclass;
  GeneralInfo general;
  std::optional<StringStats> strings;
  std::vector<std::string> coff_characteristics;
  std::string subsystem;
  std::string entry_section_name;
  std::vector<RawSection> sections;
  std::map<std::string, std::vector<std::string>> imports;
  std::vector<std::string> exports;
  std::vector<DataDirectory> datadirectories;
  // Original input line, kept verbatim so bundles can re-emit the record
  // without losing fields this model does not interpret.
  std::string raw_text;

  bool labeled() const { return label >= 0; }
  bool malware() const { return label == 1; }
};

class SampleError : public std::runtime_error {
 public:
  enum class Kind { MalformedJson, MissingField, BadFieldType, InvalidFieldValue };

  SampleError(Kind kind, std::string field, std::string context)
      : std::runtime_error(format(kind, field, context)),
        kind_(kind),
        field_(std::move(field)),
        context_(std::move(context)) {}

  Kind kind() const { return kind_; }
  const std::string& field() const { return field_; }
  const std::string& context() const { return context_; }

 private:
  static std::string format(Kind kind, const std::string& field,
                            const std::string& context);

  Kind kind_;
  std::string field_;
  std::string context_;
};

RawSample parse_sample(std::string_view text);

struct LineError {
  std::size_t line_number = 0;  // 1-based
  std::size_t byte_offset = 0;
  std::string message;
};

struct DatasetParse {
  std::vector<RawSample> samples;
  std::vector<LineError> errors;
};

// Reads newline-delimited records. With strict=true the first bad line throws;
// otherwise bad lines are collected and parsing continues.
DatasetParse parse_dataset(std::istream& in, bool strict = false);
DatasetParse parse_dataset_file(const std::string& path, bool strict = false);

}  // namespace peonto
