#include "peonto/pipeline.hpp"

#include <map>
#include <set>
#include <sstream>
#include <string>

#include "doctest.h"
#include "peonto/turtle.hpp"
#include "synthetic.hpp"
#include "test_util.hpp"

using namespace peonto;

namespace {

const ClassHierarchy& hier() {
  static const ClassHierarchy h = ClassHierarchy::standard(default_vocabulary());
  return h;
}

std::vector<RawSample> golden_samples(std::size_t copies = 1) {
  std::string line = test::read_text(test::data_path("golden_sample.jsonl"));
  std::vector<RawSample> out;
  for (std::size_t i = 0; i < copies; ++i) out.push_back(parse_sample(line));
  return out;
}

}  // namespace

TEST_CASE("the golden record materializes to the frozen document") {
  Materialized m = materialize(golden_samples(), ConvertOptions{});

  CHECK(m.stats.samples == 1);
  CHECK(m.stats.renamed_iris == 0);
  CHECK(m.stats.warnings.empty());

  CHECK(emit_turtle(m.kb, hier()) ==
        test::read_text(test::data_path("golden_expected.ttl")));

  CHECK(m.stats.metrics.individuals == m.kb.individuals.size());
  CHECK(m.stats.metrics.class_assertions == m.kb.class_assertions.size());
  CHECK(m.stats.metrics.object_assertions == m.kb.object_assertions.size());
  CHECK(m.stats.metrics.data_assertions == m.kb.data_assertions.size());
  CHECK(m.stats.metrics.total_axioms ==
        m.stats.metrics.individuals + m.stats.metrics.class_assertions +
            m.stats.metrics.object_assertions + m.stats.metrics.data_assertions);
}

TEST_CASE("repeated md5s get numbered local names") {
  auto samples = golden_samples(3);
  Materialized m = materialize(samples, ConvertOptions{});
  const std::string& md5 = samples[0].md5;

  CHECK(m.stats.renamed_iris == 2);
  REQUIRE(m.stats.warnings.size() == 2);
  CHECK(m.stats.warnings[0] ==
        "duplicate sample iri " + md5 + ", renamed to " + md5 + "_2");
  CHECK(m.stats.warnings[1] ==
        "duplicate sample iri " + md5 + ", renamed to " + md5 + "_3");

  CHECK(m.kb.individuals.count(md5));
  CHECK(m.kb.individuals.count(md5 + "_2"));
  CHECK(m.kb.individuals.count(md5 + "_3"));
  CHECK(m.kb.individuals.count("code_" + md5 + "_2"));
  CHECK(m.kb.classes_of(md5 + "_2") == std::set<std::string>{"ExecutableFile"});
}

TEST_CASE("disjointness axioms are added on request") {
  ConvertOptions options;
  CHECK(materialize(golden_samples(), options).kb.disjoint_classes.empty());

  options.with_disjointness = true;
  Materialized m = materialize(golden_samples(), options);
  CHECK(m.kb.disjoint_classes.size() == 15);
  CHECK(m.kb.disjoint_classes.count({"Action", "PEFile"}));
}

TEST_CASE("derivation notes reflect the configured thresholds") {
  Thresholds defaults;
  auto notes = derived_feature_notes(defaults);
  REQUIRE(notes.size() == 11);

  std::map<std::string, std::string> by_id(notes.begin(), notes.end());
  CHECK(by_id.size() == 11);
  CHECK(by_id.at("exports") == "exports_count > 0");
  CHECK(by_id.at("low_imports_count") == "imports_count < 10");
  CHECK(by_id.at("nonstandard_mz") == "mz_count <> 1");
  CHECK(by_id.at("high_entropy") == "section_entropy > 7");
  CHECK(by_id.at("url_strings") == "urls_count > 0");
  CHECK(by_id.at("nonstandard_section_name").find("text") != std::string::npos);

  Thresholds custom;
  custom.imports_threshold = 4;
  custom.entropy_threshold = 6.5;
  custom.mz_rule = MzRule::Annotation;
  std::map<std::string, std::string> tuned;
  for (auto& [id, text] : derived_feature_notes(custom)) tuned[id] = text;
  CHECK(tuned.at("low_imports_count") == "imports_count < 4");
  CHECK(tuned.at("high_entropy") == "section_entropy > 6.5");
  CHECK(tuned.at("nonstandard_mz") == "mz_count > 1");

  ConvertOptions options;
  options.with_derived_annotations = true;
  Materialized m = materialize(golden_samples(), options);
  CHECK(m.kb.annotations.size() == 11);
  for (const auto& [subject, property, text] : m.kb.annotations) {
    CHECK(property == "derived_as");
    CHECK(by_id.count(subject));
    CHECK(by_id.at(subject) == text);
  }
}

TEST_CASE("worker count never changes the result") {
  auto corpus = test::synthetic_corpus(2024, 40);

  ConvertOptions serial;
  ConvertOptions parallel;
  parallel.workers = 4;

  Materialized a = materialize(corpus, serial);
  Materialized b = materialize(corpus, parallel);

  CHECK(a.kb.individuals == b.kb.individuals);
  CHECK(a.kb.class_assertions == b.kb.class_assertions);
  CHECK(a.kb.object_assertions == b.kb.object_assertions);
  CHECK(a.kb.data_assertions == b.kb.data_assertions);
  CHECK(emit_turtle(a.kb, hier()) == emit_turtle(b.kb, hier()));
  CHECK(a.stats.renamed_iris == b.stats.renamed_iris);
}

TEST_CASE("round trips survive whole synthetic corpora") {
  auto corpus = test::synthetic_corpus(7, 25);
  ConvertOptions options;
  options.with_disjointness = true;
  options.with_derived_annotations = true;
  Materialized m = materialize(corpus, options);

  std::string text = emit_turtle(m.kb, hier());
  KnowledgeBase reparsed = parse_turtle(text, hier());
  CHECK(reparsed.individuals == m.kb.individuals);
  CHECK(reparsed.class_assertions == m.kb.class_assertions);
  CHECK(reparsed.object_assertions == m.kb.object_assertions);
  CHECK(reparsed.data_assertions == m.kb.data_assertions);
  CHECK(reparsed.disjoint_classes == m.kb.disjoint_classes);
  CHECK(reparsed.annotations == m.kb.annotations);
  CHECK(emit_turtle(reparsed, hier()) == text);
}

TEST_CASE("degenerate inputs stay well formed") {
  Materialized empty = materialize({}, ConvertOptions{});
  CHECK(empty.kb.individuals.empty());
  CHECK(empty.stats.samples == 0);
  CHECK(empty.stats.metrics.total_axioms == 0);

  ConvertOptions bad;
  bad.thresholds.entropy_threshold = 8.0;
  CHECK_THROWS_AS(materialize(golden_samples(), bad), std::invalid_argument);
}
