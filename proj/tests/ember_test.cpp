#include "peonto/ember.hpp"

#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "test_util.hpp"

using namespace peonto;
using nlohmann::json;

namespace {

json minimal_record() {
  json doc;
  doc["sha256"] = std::string(64, 'a');
  doc["md5"] = std::string(32, 'b');
  doc["label"] = 0;
  doc["general"] = {{"exports", 0}, {"imports", 0},          {"symbols", 0},
                    {"has_debug", 0}, {"has_relocations", 0}, {"has_resources", 0},
                    {"has_signature", 0}, {"has_tls", 0}};
  doc["header"] = {{"coff", {{"characteristics", json::array()}}}};
  doc["section"] = {{"entry", ""}, {"sections", json::array()}};
  doc["imports"] = json::object();
  doc["exports"] = json::array();
  doc["datadirectories"] = json::array();
  return doc;
}

}  // namespace

TEST_CASE("golden record parses with every interpreted field") {
  auto text = test::read_text(test::data_path("golden_sample.jsonl"));
  RawSample s = parse_sample(text);

  CHECK(s.md5 == "aba129a3d1ba9d307dad05617f66d8e7");
  CHECK(s.sha256 ==
        "eb87d82ad7bdc1b753bf91858d2986063ebd8aabeb8e7e91c0c78db21982a0d6");
  CHECK(s.label == 1);
  CHECK(s.malware());
  CHECK(s.labeled());
  REQUIRE(s.avclass.has_value());
  CHECK(*s.avclass == "fareit");

  CHECK(s.general.exports_count == 0);
  CHECK(s.general.imports_count == 17);
  CHECK(s.general.symbols_count == 0);
  CHECK_FALSE(s.general.has_debug);
  CHECK(s.general.has_relocations);
  CHECK(s.general.has_resources);
  CHECK_FALSE(s.general.has_signature);
  CHECK(s.general.has_tls);

  REQUIRE(s.strings.has_value());
  CHECK(s.strings->paths_count == 0);
  CHECK(s.strings->urls_count == 9);
  CHECK(s.strings->registry_count == 0);
  CHECK(s.strings->mz_count == 11);

  CHECK(s.subsystem == "WINDOWS_GUI");
  CHECK(s.entry_section_name == "CODE");
  REQUIRE(s.sections.size() == 6);
  CHECK(s.sections[0].name == "CODE");
  CHECK(s.sections[0].entropy == doctest::Approx(6.532932639432919).epsilon(1e-15));
  CHECK(s.sections[0].props ==
        std::vector<std::string>{"CNT_CODE", "MEM_EXECUTE", "MEM_READ"});
  CHECK(s.sections[4].name == ".reloc");

  REQUIRE(s.imports.count("kernel32.dll"));
  CHECK(s.imports.at("kernel32.dll").size() == 14);
  CHECK(s.imports.at("user32.dll").size() == 2);
  CHECK(s.imports.at("advapi32.dll") == std::vector<std::string>{"RegQueryValueExA"});
  CHECK(s.exports.empty());

  REQUIRE(s.datadirectories.size() == 15);
  CHECK(s.datadirectories[14].name == "CLR_RUNTIME_HEADER");
  CHECK(s.datadirectories[14].virtual_address == 0);
  REQUIRE(s.datadirectories[14].size.has_value());
  CHECK(*s.datadirectories[14].size == 0);

  CHECK(s.raw_text == text);
}

TEST_CASE("hashes are lowercased on the way in") {
  json doc = minimal_record();
  doc["sha256"] = std::string(64, 'A');
  doc["md5"] = std::string(32, 'F');
  RawSample s = parse_sample(doc.dump());
  CHECK(s.sha256 == std::string(64, 'a'));
  CHECK(s.md5 == std::string(32, 'f'));
}

TEST_CASE("missing required fields are reported by name") {
  for (const char* field : {"sha256", "md5", "label", "general", "header",
                            "section", "imports", "exports", "datadirectories"}) {
    json doc = minimal_record();
    doc.erase(field);
    try {
      parse_sample(doc.dump());
      FAIL("expected SampleError for missing " << field);
    } catch (const SampleError& e) {
      CHECK(e.kind() == SampleError::Kind::MissingField);
      CHECK(e.field() == field);
    }
  }
}

TEST_CASE("malformed json is its own error kind") {
  CHECK_THROWS_AS(parse_sample("{not json"), SampleError);
  try {
    parse_sample("[1, 2]");
    FAIL("arrays are not records");
  } catch (const SampleError& e) {
    CHECK(e.kind() == SampleError::Kind::MalformedJson);
  }
}

TEST_CASE("type and value violations") {
  json doc = minimal_record();
  doc["label"] = "malware";
  CHECK_THROWS_AS(parse_sample(doc.dump()), SampleError);

  doc = minimal_record();
  doc["label"] = 2;
  try {
    parse_sample(doc.dump());
    FAIL("label out of range");
  } catch (const SampleError& e) {
    CHECK(e.kind() == SampleError::Kind::InvalidFieldValue);
    CHECK(e.field() == "label");
  }

  doc = minimal_record();
  doc["md5"] = "zz";
  try {
    parse_sample(doc.dump());
    FAIL("md5 must be 32 hex chars");
  } catch (const SampleError& e) {
    CHECK(e.kind() == SampleError::Kind::InvalidFieldValue);
  }

  doc = minimal_record();
  doc["section"]["sections"] = json::array(
      {{{"name", "x"}, {"entropy", 9.5}, {"props", json::array()}}});
  try {
    parse_sample(doc.dump());
    FAIL("entropy above 8 is invalid");
  } catch (const SampleError& e) {
    CHECK(e.kind() == SampleError::Kind::InvalidFieldValue);
    CHECK(e.field() == "entropy");
  }

  doc = minimal_record();
  doc["general"]["imports"] = -3;
  try {
    parse_sample(doc.dump());
    FAIL("negative counts are rejected");
  } catch (const SampleError& e) {
    CHECK(e.kind() == SampleError::Kind::BadFieldType);
    CHECK(e.field() == "imports");
  }
}

TEST_CASE("boolean flags accept both json booleans and 0/1") {
  json doc = minimal_record();
  doc["general"]["has_tls"] = true;
  doc["general"]["has_debug"] = 1;
  RawSample s = parse_sample(doc.dump());
  CHECK(s.general.has_tls);
  CHECK(s.general.has_debug);

  doc["general"]["has_tls"] = 3;
  CHECK_THROWS_AS(parse_sample(doc.dump()), SampleError);
}

TEST_CASE("optional blocks may be absent or null") {
  json doc = minimal_record();
  RawSample s = parse_sample(doc.dump());
  CHECK_FALSE(s.strings.has_value());
  CHECK_FALSE(s.avclass.has_value());
  CHECK(s.subsystem.empty());

  doc["strings"] = nullptr;
  doc["avclass"] = nullptr;
  s = parse_sample(doc.dump());
  CHECK_FALSE(s.strings.has_value());
  CHECK_FALSE(s.avclass.has_value());

  doc["label"] = -1;
  s = parse_sample(doc.dump());
  CHECK_FALSE(s.labeled());
  CHECK_FALSE(s.malware());
}

TEST_CASE("dataset reader collects per-line errors in lenient mode") {
  json good = minimal_record();
  std::ostringstream text;
  text << good.dump() << "\n";
  text << "\n";
  text << "   \n";
  text << "{broken\n";
  json second = minimal_record();
  second["md5"] = std::string(32, 'c');
  text << second.dump() << "\n";

  std::istringstream in(text.str());
  DatasetParse parsed = parse_dataset(in, false);
  CHECK(parsed.samples.size() == 2);
  REQUIRE(parsed.errors.size() == 1);
  CHECK(parsed.errors[0].line_number == 4);
  CHECK(parsed.errors[0].byte_offset ==
        good.dump().size() + 1 + 1 + 4);
  CHECK(parsed.samples[0].raw_text == good.dump());
}

TEST_CASE("dataset reader stops at the first error in strict mode") {
  std::istringstream in("{bad}\n");
  CHECK_THROWS_AS(parse_dataset(in, true), SampleError);
  try {
    std::istringstream again("{bad}\n");
    parse_dataset(again, true);
  } catch (const SampleError& e) {
    CHECK(std::string(e.what()).find("line 1") != std::string::npos);
  }
}

TEST_CASE("missing dataset file raises a filesystem error") {
  CHECK_THROWS_AS(parse_dataset_file("/nonexistent/input.jsonl"), std::runtime_error);
}
