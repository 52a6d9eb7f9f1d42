#include "peonto/ember.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace peonto {
namespace {

using nlohmann::json;

bool is_hex_string(const std::string& s, std::size_t len) {
  if (s.size() != len) return false;
  for (char c : s)
    if (!std::isxdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::string to_lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

[[noreturn]] void fail(SampleError::Kind kind, const std::string& field,
                       const std::string& context) {
  throw SampleError(kind, field, context);
}

const json& require(const json& obj, const char* name, const std::string& ctx) {
  auto it = obj.find(name);
  if (it == obj.end()) fail(SampleError::Kind::MissingField, name, ctx);
  return *it;
}

std::uint64_t require_count(const json& obj, const char* name, const std::string& ctx) {
  const json& v = require(obj, name, ctx);
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
    fail(SampleError::Kind::BadFieldType, name, ctx);
  return v.get<std::uint64_t>();
}

bool require_flag(const json& obj, const char* name, const std::string& ctx) {
  const json& v = require(obj, name, ctx);
  if (v.is_boolean()) return v.get<bool>();
  if (v.is_number_integer()) {
    auto n = v.get<std::int64_t>();
    if (n == 0 || n == 1) return n == 1;
  }
  fail(SampleError::Kind::BadFieldType, name, ctx);
}

std::string require_string(const json& obj, const char* name, const std::string& ctx) {
  const json& v = require(obj, name, ctx);
  if (!v.is_string()) fail(SampleError::Kind::BadFieldType, name, ctx);
  return v.get<std::string>();
}

std::vector<std::string> string_list(const json& v, const char* name,
                                     const std::string& ctx) {
  if (!v.is_array()) fail(SampleError::Kind::BadFieldType, name, ctx);
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const auto& e : v) {
    if (!e.is_string()) fail(SampleError::Kind::BadFieldType, name, ctx);
    out.push_back(e.get<std::string>());
  }
  return out;
}

}  // namespace

std::string SampleError::format(Kind kind, const std::string& field,
                                const std::string& context) {
  const char* what = "";
  switch (kind) {
    case Kind::MalformedJson: what = "malformed JSON"; break;
    case Kind::MissingField: what = "missing field"; break;
    case Kind::BadFieldType: what = "bad field type"; break;
    case Kind::InvalidFieldValue: what = "invalid field value"; break;
  }
  std::string msg = what;
  if (!field.empty()) msg += " '" + field + "'";
  if (!context.empty()) msg += " (" + context + ")";
  return msg;
}

RawSample parse_sample(std::string_view text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded() || !doc.is_object())
    fail(SampleError::Kind::MalformedJson, "", "");

  std::string ctx;
  if (auto it = doc.find("md5"); it != doc.end() && it->is_string())
    ctx = "sample " + it->get<std::string>();

  RawSample s;
  s.raw_text.assign(text.begin(), text.end());

  s.sha256 = to_lower(require_string(doc, "sha256", ctx));
  s.md5 = to_lower(require_string(doc, "md5", ctx));
  if (!is_hex_string(s.sha256, 64))
    fail(SampleError::Kind::InvalidFieldValue, "sha256", ctx);
  if (!is_hex_string(s.md5, 32))
    fail(SampleError::Kind::InvalidFieldValue, "md5", ctx);

  const json& label = require(doc, "label", ctx);
  if (!label.is_number_integer())
    fail(SampleError::Kind::BadFieldType, "label", ctx);
  s.label = label.get<int>();
  if (s.label < -1 || s.label > 1)
    fail(SampleError::Kind::InvalidFieldValue, "label", ctx);

  if (auto it = doc.find("avclass"); it != doc.end() && !it->is_null()) {
    if (!it->is_string()) fail(SampleError::Kind::BadFieldType, "avclass", ctx);
    s.avclass = it->get<std::string>();
  }

  const json& general = require(doc, "general", ctx);
  if (!general.is_object()) fail(SampleError::Kind::BadFieldType, "general", ctx);
  s.general.exports_count = require_count(general, "exports", ctx);
  s.general.imports_count = require_count(general, "imports", ctx);
  s.general.symbols_count = require_count(general, "symbols", ctx);
  s.general.has_debug = require_flag(general, "has_debug", ctx);
  s.general.has_relocations = require_flag(general, "has_relocations", ctx);
  s.general.has_resources = require_flag(general, "has_resources", ctx);
  s.general.has_signature = require_flag(general, "has_signature", ctx);
  s.general.has_tls = require_flag(general, "has_tls", ctx);

  // SOREL-style records carry no string statistics; the block stays absent
  // rather than defaulting to zeros.
  if (auto it = doc.find("strings"); it != doc.end() && !it->is_null()) {
    if (!it->is_object()) fail(SampleError::Kind::BadFieldType, "strings", ctx);
    StringStats st;
    st.paths_count = require_count(*it, "paths", ctx);
    st.urls_count = require_count(*it, "urls", ctx);
    st.registry_count = require_count(*it, "registry", ctx);
    st.mz_count = require_count(*it, "MZ", ctx);
    s.strings = st;
  }

  const json& header = require(doc, "header", ctx);
  if (!header.is_object()) fail(SampleError::Kind::BadFieldType, "header", ctx);
  const json& coff = require(header, "coff", ctx);
  if (!coff.is_object()) fail(SampleError::Kind::BadFieldType, "coff", ctx);
  s.coff_characteristics =
      string_list(require(coff, "characteristics", ctx), "characteristics", ctx);
  if (auto it = header.find("optional"); it != header.end() && it->is_object()) {
    if (auto sub = it->find("subsystem"); sub != it->end() && sub->is_string())
      s.subsystem = sub->get<std::string>();
  }

  const json& section = require(doc, "section", ctx);
  if (!section.is_object()) fail(SampleError::Kind::BadFieldType, "section", ctx);
  s.entry_section_name = require_string(section, "entry", ctx);
  const json& sections = require(section, "sections", ctx);
  if (!sections.is_array()) fail(SampleError::Kind::BadFieldType, "sections", ctx);
  for (const auto& sec : sections) {
    if (!sec.is_object()) fail(SampleError::Kind::BadFieldType, "sections", ctx);
    RawSection rs;
    rs.name = require_string(sec, "name", ctx);
    const json& entropy = require(sec, "entropy", ctx);
    if (!entropy.is_number()) fail(SampleError::Kind::BadFieldType, "entropy", ctx);
    rs.entropy = entropy.get<double>();
    if (!std::isfinite(rs.entropy) || rs.entropy < 0.0 || rs.entropy > 8.0)
      fail(SampleError::Kind::InvalidFieldValue, "entropy", ctx);
    rs.props = string_list(require(sec, "props", ctx), "props", ctx);
    s.sections.push_back(std::move(rs));
  }

  const json& imports = require(doc, "imports", ctx);
  if (!imports.is_object()) fail(SampleError::Kind::BadFieldType, "imports", ctx);
  for (auto it = imports.begin(); it != imports.end(); ++it)
    s.imports[it.key()] = string_list(it.value(), "imports", ctx);

  s.exports = string_list(require(doc, "exports", ctx), "exports", ctx);

  const json& dirs = require(doc, "datadirectories", ctx);
  if (!dirs.is_array()) fail(SampleError::Kind::BadFieldType, "datadirectories", ctx);
  for (const auto& d : dirs) {
    if (!d.is_object()) fail(SampleError::Kind::BadFieldType, "datadirectories", ctx);
    DataDirectory dd;
    dd.name = require_string(d, "name", ctx);
    dd.virtual_address = require_count(d, "virtual_address", ctx);
    if (auto it = d.find("size"); it != d.end()) {
      if (!it->is_number_integer() || it->get<std::int64_t>() < 0)
        fail(SampleError::Kind::BadFieldType, "size", ctx);
      dd.size = it->get<std::uint64_t>();
    }
    s.datadirectories.push_back(std::move(dd));
  }

  return s;
}

DatasetParse parse_dataset(std::istream& in, bool strict) {
  DatasetParse out;
  std::string line;
  std::size_t line_number = 0;
  std::size_t offset = 0;
  while (std::getline(in, line)) {
    ++line_number;
    std::size_t line_offset = offset;
    offset += line.size() + 1;
    bool blank = true;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) {
        blank = false;
        break;
      }
    if (blank) continue;
    try {
      out.samples.push_back(parse_sample(line));
    } catch (const SampleError& e) {
      if (strict) {
        std::ostringstream msg;
        msg << "line " << line_number << ": " << e.what();
        throw SampleError(e.kind(), e.field(), msg.str());
      }
      out.errors.push_back({line_number, line_offset, e.what()});
    }
  }
  return out;
}

DatasetParse parse_dataset_file(const std::string& path, bool strict) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open input file: " + path);
  return parse_dataset(in, strict);
}

}  // namespace peonto
