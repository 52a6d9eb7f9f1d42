// Acceptance gate. Each criterion prints one [PASS]/[FAIL] line; the binary
// exits nonzero when any of them fails. Time budgets are checked with a
// steady clock around the work each criterion is allowed to count.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <deque>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "naive_eval.hpp"
#include "peonto/actions.hpp"
#include "peonto/concepts.hpp"
#include "peonto/ember.hpp"
#include "peonto/evaluator.hpp"
#include "peonto/features.hpp"
#include "peonto/learner.hpp"
#include "peonto/ontology.hpp"
#include "peonto/pipeline.hpp"
#include "peonto/refinement.hpp"
#include "peonto/rng.hpp"
#include "peonto/sampler.hpp"
#include "peonto/stats.hpp"
#include "peonto/turtle.hpp"
#include "synthetic.hpp"
#include "test_util.hpp"

namespace {

using namespace peonto;
using peonto::test::data_path;
using peonto::test::read_text;
using peonto::test::synthetic_corpus;
using peonto::test::SyntheticOptions;

const ClassHierarchy& hier() {
  static const ClassHierarchy h = ClassHierarchy::standard(default_vocabulary());
  return h;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string over_budget(double secs, double limit) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "took %.2fs, budget %.0fs", secs, limit);
  return buf;
}

std::set<std::string> to_names(const KbIndex& index, const Bitset& bits) {
  std::set<std::string> out;
  bits.for_each([&](std::size_t i) { out.insert(index.individuals()[i]); });
  return out;
}

// --- criterion 1: the frozen corpus still materializes byte for byte --------

std::string criterion_golden() {
  auto t0 = std::chrono::steady_clock::now();
  std::istringstream in(read_text(data_path("golden_sample.jsonl")));
  auto parsed = parse_dataset(in, true);
  auto built = materialize(parsed.samples, ConvertOptions{});
  std::string emitted = emit_turtle(built.kb, hier());
  if (emitted != read_text(data_path("golden_expected.ttl")))
    return "emitted document differs from the frozen one";
  KnowledgeBase reread = parse_turtle(emitted, hier());
  if (reread.individuals != built.kb.individuals ||
      reread.class_assertions != built.kb.class_assertions ||
      reread.object_assertions != built.kb.object_assertions ||
      reread.data_assertions != built.kb.data_assertions)
    return "re-parsed triples differ from the built store";
  double secs = seconds_since(t0);
  if (secs >= 1.0) return over_budget(secs, 1);
  return {};
}

// --- criterion 2: every derived assertion matches its defining rule ---------

std::string criterion_feature_oracle() {
  auto t0 = std::chrono::steady_clock::now();
  auto samples = synthetic_corpus(20260815, 1000);
  auto built = materialize(samples, ConvertOptions{});
  KbIndex index(built.kb, hier());
  const ActionVocabulary& vocab = default_vocabulary();

  std::size_t mismatches = 0;
  std::string first;
  auto flag = [&](const std::string& what) {
    if (mismatches++ == 0) first = what;
  };

  for (const auto& s : samples) {
    bool dll = false;
    for (const auto& token : s.coff_characteristics)
      if (token == "DLL" ||
          (token.size() >= 4 && token.compare(token.size() - 4, 4, "_DLL") == 0))
        dll = true;
    std::set<std::string> want_class{dll ? "DynamicLinkLibrary" : "ExecutableFile"};
    if (built.kb.classes_of(s.md5) != want_class) flag("file kind of " + s.md5);

    std::set<std::string> want;
    if (s.general.has_debug) want.insert("debug");
    if (s.general.has_relocations) want.insert("relocations");
    if (s.general.has_resources) want.insert("resources");
    if (s.general.has_signature) want.insert("signature");
    if (s.general.has_tls) want.insert("tls");
    if (s.general.exports_count > 0) want.insert("exports");
    if (s.general.imports_count < 10) want.insert("low_imports_count");
    if (s.general.symbols_count > 0) want.insert("symbols");
    for (const auto& dir : s.datadirectories) {
      std::string upper = dir.name;
      for (char& c : upper) c = static_cast<char>(std::toupper((unsigned char)c));
      if (upper == "CLR_RUNTIME_HEADER" &&
          (dir.virtual_address != 0 || dir.size.value_or(0) != 0))
        want.insert("clr");
    }
    for (const auto& sec : s.sections)
      if (sec.name == s.entry_section_name) {
        if (std::find(sec.props.begin(), sec.props.end(), "MEM_EXECUTE") ==
            sec.props.end())
          want.insert("nonexecutable_entry_point");
        break;
      }
    std::size_t executable = 0;
    for (const auto& sec : s.sections)
      if (std::find(sec.props.begin(), sec.props.end(), "MEM_EXECUTE") !=
          sec.props.end())
        ++executable;
    if (executable >= 2) want.insert("multiple_executable_sections");
    if (s.strings) {
      if (s.strings->mz_count != 1) want.insert("nonstandard_mz");
      if (s.strings->paths_count > 0) want.insert("path_strings");
      if (s.strings->registry_count > 0) want.insert("registry_strings");
      if (s.strings->urls_count > 0) want.insert("url_strings");
    }
    auto got = built.kb.successors(s.md5, "has_file_feature");
    if (std::set<std::string>(got.begin(), got.end()) != want)
      flag("features of " + s.md5);

    std::set<std::string> actions;
    for (const auto& [dll_name, functions] : s.imports) {
      (void)dll_name;
      for (const auto& fn : functions) {
        auto it = vocab.api_to_action.find(fn);
        if (it == vocab.api_to_action.end() && fn.size() > 1 &&
            (fn.back() == 'A' || fn.back() == 'W'))
          it = vocab.api_to_action.find(fn.substr(0, fn.size() - 1));
        if (it != vocab.api_to_action.end()) actions.insert(it->second);
      }
    }
    auto got_actions = built.kb.successors(s.md5, "has_action");
    if (std::set<std::string>(got_actions.begin(), got_actions.end()) != actions)
      flag("actions of " + s.md5);
  }

  // The derived features must also coincide with the extension of their
  // defining class expression evaluated over the emitted assertions.
  auto ext = [&](const ConceptPtr& c) -> std::set<std::string> {
    try {
      return to_names(index, index.evaluate(*c));
    } catch (const EvalError&) {
      return {};
    }
  };
  using C = Concept;
  auto check_def = [&](const std::string& property, const std::string& proto,
                       const ConceptPtr& definition) {
    if (ext(C::has_value(property, {proto})) != ext(definition))
      flag("definition of " + proto);
  };
  check_def("has_file_feature", "exports",
            C::data_compare("exports_count", DataOp::Greater, 0, true));
  check_def("has_file_feature", "symbols",
            C::data_compare("symbols_count", DataOp::Greater, 0, true));
  check_def("has_file_feature", "path_strings",
            C::data_compare("path_strings_count", DataOp::Greater, 0, true));
  check_def("has_file_feature", "registry_strings",
            C::data_compare("registry_strings_count", DataOp::Greater, 0, true));
  check_def("has_file_feature", "url_strings",
            C::data_compare("url_strings_count", DataOp::Greater, 0, true));
  check_def("has_file_feature", "low_imports_count",
            C::data_compare("imports_count", DataOp::Less, 10, true));
  check_def("has_file_feature", "nonstandard_mz",
            C::union_of({C::data_compare("mz_count", DataOp::Less, 1, true),
                         C::data_compare("mz_count", DataOp::Greater, 1, true)}));
  check_def("has_file_feature", "multiple_executable_sections",
            C::cardinality(CardinalityOp::AtLeast, 2, "has_section",
                           C::exists("has_section_flag", C::named("Executable"))));
  check_def("has_section_feature", "high_entropy",
            C::data_compare("section_entropy", DataOp::Greater, 7.0, false));
  Thresholds defaults;
  check_def("has_section_feature", "nonstandard_section_name",
            C::data_not_in("section_name",
                           {defaults.standard_section_names.begin(),
                            defaults.standard_section_names.end()}));
  check_def("has_section_feature", "write_execute_section",
            C::intersection({C::exists("has_section_flag", C::named("Executable")),
                             C::exists("has_section_flag", C::named("Writable"))}));

  if (mismatches)
    return first + " (" + std::to_string(mismatches) + " mismatches)";
  double secs = seconds_since(t0);
  if (secs >= 30.0) return over_budget(secs, 30);
  return {};
}

// --- criterion 3: threshold boundaries are strict ---------------------------

std::string criterion_thresholds() {
  Thresholds th;
  RawSample s;
  RawSection sec;
  sec.name = ".text";
  sec.entropy = 7.0;
  sec.props = {"CNT_CODE", "MEM_EXECUTE", "MEM_READ"};
  s.sections.push_back(sec);
  if (derive_sections(s, th).profiles[0].features.count(SectionFeature::HighEntropy))
    return "entropy exactly 7.0 was flagged high";
  s.sections[0].entropy = std::nextafter(7.0, 8.0);
  if (!derive_sections(s, th).profiles[0].features.count(SectionFeature::HighEntropy))
    return "entropy just above 7.0 was not flagged high";

  RawSample imports;
  imports.general.imports_count = 10;
  if (derive_file_features(imports, EntryExecutability::Unknown, th)
          .count(FileFeature::LowImportsCount))
    return "imports at the threshold counted as low";
  imports.general.imports_count = 9;
  if (!derive_file_features(imports, EntryExecutability::Unknown, th)
           .count(FileFeature::LowImportsCount))
    return "imports below the threshold did not count as low";
  return {};
}

// --- criterion 4: balanced draws are exact, repeatable and disjoint ---------

std::string criterion_sampling() {
  auto t0 = std::chrono::steady_clock::now();
  SyntheticOptions so;
  so.unlabeled_rate = 0.0;
  so.dll_rate = 0.5;
  auto pool = synthetic_corpus(77001, 12000, so);

  auto take = [&](const FractionDraw& d) {
    std::vector<RawSample> out;
    out.reserve(d.selected.size());
    for (std::size_t idx : d.selected) out.push_back(pool[idx]);
    return out;
  };

  for (std::size_t size : {std::size_t{100}, std::size_t{1000}}) {
    std::string tag = " at size " + std::to_string(size);

    SamplePlan plan;
    plan.size = size;
    plan.seed = 42;
    plan.mode = SampleMode::TwoWay;
    auto a = sample_fraction(pool, plan);
    auto b = sample_fraction(pool, plan);
    if (a.selected != b.selected) return "two-way draw is not repeatable" + tag;
    if (!a.warnings.empty()) return "two-way draw warned unexpectedly" + tag;
    std::size_t malware = 0;
    for (std::size_t idx : a.selected) malware += pool[idx].malware() ? 1 : 0;
    if (malware != size / 2 || a.selected.size() != size)
      return "two-way draw is unbalanced" + tag;

    plan.mode = SampleMode::FourWay;
    auto fa = sample_fraction(pool, plan);
    auto fb = sample_fraction(pool, plan);
    if (fa.selected != fb.selected) return "four-way draw is not repeatable" + tag;
    std::map<std::string, std::size_t> strata;
    for (std::size_t idx : fa.selected) {
      const RawSample& r = pool[idx];
      bool dll = classify_file_kind(r) == FileKind::DynamicLinkLibrary;
      ++strata[std::string(dll ? "dll" : "exe") +
               (r.malware() ? "_malware" : "_benign")];
    }
    if (strata.size() != 4) return "four-way draw misses a stratum" + tag;
    for (const auto& [name, count] : strata)
      if (count != size / 4) return "stratum " + name + " is unbalanced" + tag;

    std::string doc_a = emit_turtle(materialize(take(a), ConvertOptions{}).kb, hier());
    std::string doc_b = emit_turtle(materialize(take(b), ConvertOptions{}).kb, hier());
    if (doc_a != doc_b) return "re-materialized documents differ" + tag;

    for (SampleMode mode : {SampleMode::TwoWay, SampleMode::FourWay}) {
      std::vector<std::set<std::string>> picks;
      for (unsigned variant = 1; variant <= 5; ++variant) {
        SamplePlan p;
        p.size = size;
        p.seed = 42;
        p.variant = variant;
        p.mode = mode;
        auto d = sample_fraction(pool, p);
        if (!d.warnings.empty())
          return "variant " + std::to_string(variant) + " warned unexpectedly" + tag;
        std::set<std::string> ids;
        for (std::size_t idx : d.selected) ids.insert(pool[idx].md5);
        picks.push_back(std::move(ids));
      }
      for (std::size_t i = 0; i < picks.size(); ++i)
        for (std::size_t j = i + 1; j < picks.size(); ++j) {
          std::vector<std::string> common;
          std::set_intersection(picks[i].begin(), picks[i].end(), picks[j].begin(),
                                picks[j].end(), std::back_inserter(common));
          if (!common.empty())
            return "variants " + std::to_string(i + 1) + " and " +
                   std::to_string(j + 1) + " overlap" + tag;
        }
    }
  }

  double secs = seconds_since(t0);
  if (secs >= 10.0) return over_budget(secs, 10);
  return {};
}

// --- criterion 5: metric identities ------------------------------------------

std::string criterion_metric_identities() {
  if (std::fabs(f1_score(0.85, 0.64) - 0.73) > 0.005) return "f1(0.85, 0.64) is off";
  if (std::fabs(f1_score(0.76, 0.76) - 0.76) > 0.005) return "f1(0.76, 0.76) is off";

  auto differs = [](double a, double b) { return std::fabs(a - b) > 1e-12; };
  auto ratio = [](std::size_t num, std::size_t den) {
    return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
  };

  std::mt19937_64 gen(5);
  for (int i = 0; i < 10000; ++i) {
    ConfusionMatrix cm;
    cm.tp = bounded_draw(gen, 500);
    cm.fp = bounded_draw(gen, 500);
    cm.tn = bounded_draw(gen, 500);
    cm.fn = bounded_draw(gen, 500);
    Metrics m = compute_metrics(cm);

    double accuracy = ratio(cm.tp + cm.tn, cm.total());
    double precision = ratio(cm.tp, cm.tp + cm.fp);
    double recall = ratio(cm.tp, cm.tp + cm.fn);
    double fp_rate = ratio(cm.fp, cm.fp + cm.tn);
    double f1 = precision + recall == 0.0
                    ? 0.0
                    : 2.0 * precision * recall / (precision + recall);
    if (differs(m.accuracy, accuracy) || differs(m.precision, precision) ||
        differs(m.recall, recall) || differs(m.fp_rate, fp_rate) ||
        differs(m.f1, f1) || differs(m.f1, f1_score(m.precision, m.recall)))
      return "identity broke at case " + std::to_string(i);
    for (double v : {m.accuracy, m.precision, m.recall, m.fp_rate, m.f1})
      if (v < 0.0 || v > 1.0) return "metric out of range at case " + std::to_string(i);
  }
  return {};
}

// --- criterion 6: exhaustive agreement with the reference checker -----------

// Small handwritten store: a few files and sections with class assertions,
// feature links, flags and data values. Always contains the individuals and
// data properties the concept alphabet mentions.
KnowledgeBase random_kb(std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  KnowledgeBase kb;
  auto add = [&](const std::string& ind, const std::string& cls) {
    kb.individuals.insert(ind);
    kb.class_assertions.emplace(ind, cls);
  };
  auto link = [&](const std::string& s, const std::string& p, const std::string& o) {
    kb.object_assertions.emplace(s, p, o);
  };
  auto chance = [&](unsigned percent) { return bounded_draw(gen, 100) < percent; };

  add("tls", hier().class_of_prototype("tls"));
  add("relocations", hier().class_of_prototype("relocations"));
  add("executable", "Executable");
  add("readable", "Readable");
  add("sec_a", "CodeSection");
  kb.data_assertions.emplace("sec_a", "section_entropy", Literal::real(7.5));
  kb.data_assertions.emplace("sec_a", "section_name", Literal::text("weird"));

  static const char* kFileClasses[] = {"ExecutableFile", "DynamicLinkLibrary", "PEFile"};
  static const char* kSectionClasses[] = {"CodeSection", "InitializedDataSection",
                                          "Section"};
  static const char* kNames[] = {"code", "data", "weird"};

  std::size_t files = 5 + bounded_draw(gen, 3);
  for (std::size_t f = 0; f < files; ++f) {
    std::string file = "f" + std::to_string(f);
    add(file, kFileClasses[bounded_draw(gen, 3)]);
    kb.data_assertions.emplace(file, "imports_count",
                               Literal::integer(static_cast<std::int64_t>(
                                   bounded_draw(gen, 20))));
    if (chance(45)) link(file, "has_file_feature", "tls");
    if (chance(40)) link(file, "has_file_feature", "relocations");
    if (chance(30)) link(file, "has_section", "sec_a");
    std::size_t sections = bounded_draw(gen, 3);
    for (std::size_t s = 0; s < sections; ++s) {
      std::string sec = "s" + std::to_string(s) + "_" + file;
      add(sec, kSectionClasses[bounded_draw(gen, 3)]);
      link(file, "has_section", sec);
      kb.data_assertions.emplace(
          sec, "section_entropy",
          Literal::real(8.0 * static_cast<double>(bounded_draw(gen, 1000)) / 1000.0));
      kb.data_assertions.emplace(sec, "section_name",
                                 Literal::text(kNames[bounded_draw(gen, 3)]));
      if (chance(40)) link(sec, "has_section_flag", "executable");
      if (chance(70)) link(sec, "has_section_flag", "readable");
    }
  }
  return kb;
}

// Every concept the constructors can produce over a small alphabet, deduped
// by rendered form, up to the given length.
std::vector<ConceptPtr> enumerate_concepts(int max_length) {
  using C = Concept;
  std::vector<std::vector<ConceptPtr>> pool(static_cast<std::size_t>(max_length) + 1);
  std::set<std::string> seen;
  auto add = [&](const ConceptPtr& c) {
    int len = concept_length(c);
    if (len > max_length) return;
    if (!seen.insert(render_concept(c)).second) return;
    pool[static_cast<std::size_t>(len)].push_back(c);
  };

  add(C::top());
  add(C::bottom());
  for (const char* cls : {"ExecutableFile", "Section", "TLS"}) add(C::named(cls));

  const std::vector<std::string> roles = {"has_section", "has_file_feature"};
  const std::vector<std::pair<CardinalityOp, unsigned>> cards = {
      {CardinalityOp::AtLeast, 2}, {CardinalityOp::AtMost, 1},
      {CardinalityOp::Exactly, 1}};

  for (int len = 2; len <= max_length; ++len) {
    for (const auto& c : pool[static_cast<std::size_t>(len) - 1]) add(C::negation(c));
    if (len >= 3)
      for (const auto& role : roles)
        for (const auto& filler : pool[static_cast<std::size_t>(len) - 2]) {
          add(C::exists(role, filler));
          add(C::for_all(role, filler));
          for (const auto& [op, n] : cards) add(C::cardinality(op, n, role, filler));
        }
    for (int left = 1; left + 1 < len; ++left) {
      int right = len - 1 - left;
      if (right < left) break;
      for (const auto& a : pool[static_cast<std::size_t>(left)])
        for (const auto& b : pool[static_cast<std::size_t>(right)]) {
          add(C::intersection({a, b}));
          add(C::union_of({a, b}));
        }
    }
    if (len == 3) {
      for (const auto& role : roles) add(C::has_value(role, {"tls"}));
      add(C::data_compare("imports_count", DataOp::Less, 10, true));
      add(C::data_compare("imports_count", DataOp::GreaterEq, 5, true));
      add(C::data_compare("section_entropy", DataOp::Greater, 7.0, false));
      add(C::data_not_in("section_name", {"code"}));
    }
    if (len == 4) {
      for (const auto& role : roles) add(C::has_value(role, {"sec_a", "tls"}));
      add(C::data_not_in("section_name", {"code", "data"}));
    }
  }

  std::vector<ConceptPtr> out;
  for (const auto& bucket : pool) out.insert(out.end(), bucket.begin(), bucket.end());
  return out;
}

std::string criterion_evaluator_oracle() {
  auto t0 = std::chrono::steady_clock::now();
  auto concepts = enumerate_concepts(7);
  std::size_t mismatches = 0;
  std::string first;
  for (std::uint64_t seed : {901, 902, 903}) {
    KnowledgeBase kb = random_kb(seed);
    KbIndex index(kb, hier());
    for (const auto& c : concepts) {
      auto fast = to_names(index, index.evaluate(*c));
      auto slow = peonto::test::naive_extension(kb, hier(), *c);
      if (fast != slow && mismatches++ == 0)
        first = render_concept(c) + " on store " + std::to_string(seed);
    }
  }
  if (mismatches)
    return first + " (" + std::to_string(mismatches) + " of " +
           std::to_string(concepts.size()) + " concepts x 3 stores)";
  double secs = seconds_since(t0);
  if (secs >= 120.0) return over_budget(secs, 120);
  return {};
}

// --- criterion 7: planted concepts are recovered -----------------------------

struct PlantedProblem {
  std::string title;
  ConceptPtr target;
  LearnerConfig config;
  SyntheticOptions options;
  std::uint64_t seed;
};

std::string run_planted(const PlantedProblem& p) {
  auto t0 = std::chrono::steady_clock::now();
  for (std::uint64_t attempt = 0; attempt < 40; ++attempt) {
    auto samples = synthetic_corpus(p.seed + attempt, 200, p.options);
    auto built = materialize(samples, ConvertOptions{});
    KbIndex index(built.kb, hier());
    std::set<std::string> matched;
    try {
      matched = to_names(index, index.evaluate(*p.target));
    } catch (const EvalError&) {
      continue;  // a nominal the corpus never referenced; try the next seed
    }
    LearningProblem problem;
    for (const auto& s : samples)
      (matched.count(s.md5) ? problem.positives : problem.negatives).push_back(s.md5);
    if (problem.positives.size() < 15 || problem.negatives.size() < 15) continue;

    auto result = learn(index, problem, p.config);
    if (result.train_accuracy != 1.0)
      return p.title + ": training accuracy " + std::to_string(result.train_accuracy) +
             " for " + render_concept(result.expression);
    auto cv = cross_validate(index, problem, p.config, 5, 99);
    if (cv.mean.accuracy < 0.95)
      return p.title + ": mean test accuracy " + std::to_string(cv.mean.accuracy);
    double secs = seconds_since(t0);
    if (secs > 60.0) return p.title + ": " + over_budget(secs, 60);
    return {};
  }
  return p.title + ": no attempt produced 15 examples of each class";
}

std::string criterion_planted_learning() {
  using C = Concept;
  std::vector<PlantedProblem> problems;
  {
    PlantedProblem p;
    p.title = "parcel";
    p.target = C::intersection(
        {C::has_value("has_action", {"modify-process-virtual-memory-protection"}),
         C::has_value("has_file_feature", {"nonexecutable_entry_point"})});
    p.config.algorithm = Algorithm::Parcel;
    p.config.use_has_value = true;
    p.config.use_union = false;
    p.seed = 501;
    problems.push_back(std::move(p));
  }
  {
    PlantedProblem p;
    p.title = "sparcel";
    p.target = C::intersection(
        {C::named("DynamicLinkLibrary"),
         C::negation(C::has_value("has_file_feature", {"url_strings"}))});
    p.config.algorithm = Algorithm::Sparcel;
    p.config.use_has_value = true;
    p.config.use_negation = true;
    p.config.use_union = false;
    p.seed = 502;
    problems.push_back(std::move(p));
  }
  {
    PlantedProblem p;
    p.title = "celoe over section features";
    p.target = C::intersection(
        {C::named("ExecutableFile"),
         C::exists("has_section",
                   C::exists("has_section_feature",
                             C::union_of({C::named("HighEntropy"),
                                          C::named("WriteExecuteSection")})))});
    p.config.algorithm = Algorithm::SingleCeloe;
    p.options.malware_high_entropy_rate = 0.25;
    p.options.benign_high_entropy_rate = 0.25;
    p.seed = 503;
    problems.push_back(std::move(p));
  }
  {
    PlantedProblem p;
    p.title = "ocel over section flags";
    p.target = C::intersection(
        {C::named("ExecutableFile"),
         C::exists("has_section",
                   C::intersection(
                       {C::named("CodeSection"),
                        C::exists("has_section_flag", C::named("Writable"))}))});
    p.config.algorithm = Algorithm::SingleOcel;
    p.seed = 504;
    problems.push_back(std::move(p));
  }

  for (auto& p : problems) {
    p.config.time_budget_seconds = 8.0;
    std::string err = run_planted(p);
    if (!err.empty()) return err;
  }
  return {};
}

// --- criterion 8: refinements only ever shrink the extension ----------------

std::string criterion_refinement_soundness() {
  std::size_t checked = 0;
  std::size_t violations = 0;
  std::string first;

  auto drive = [&](const KnowledgeBase& kb, const std::string& domain,
                   std::size_t quota) {
    KbIndex index(kb, hier());
    RefinementConfig cfg;
    cfg.use_negation = true;
    cfg.use_has_value = true;
    RefinementOperator op(index, cfg, domain);
    std::deque<ConceptPtr> queue;
    queue.push_back(Concept::top());
    std::set<std::string> visited{render_concept(Concept::top())};
    std::size_t done = 0;
    while (!queue.empty() && done < quota) {
      ConceptPtr c = queue.front();
      queue.pop_front();
      Bitset parent = index.evaluate(*c);
      for (const auto& r : op.refine(c, 9)) {
        ++checked;
        ++done;
        if (!index.evaluate(*r).is_subset_of(parent)) {
          if (violations++ == 0)
            first = render_concept(r) + " is not below " + render_concept(c);
        }
        if (visited.size() < 4000 && visited.insert(render_concept(r)).second)
          queue.push_back(r);
        if (done >= quota) break;
      }
    }
  };

  drive(random_kb(8101), "PEFile", 2200);
  drive(random_kb(8102), "PEFile", 2200);
  drive(random_kb(8103), "", 2200);
  drive(materialize(synthetic_corpus(424242, 40), ConvertOptions{}).kb, "PEFile", 3500);

  if (violations)
    return first + " (" + std::to_string(violations) + " of " +
           std::to_string(checked) + ")";
  if (checked < 10000)
    return "only " + std::to_string(checked) + " refinement pairs checked";
  return {};
}

// --- criterion 9: serialization round trips byte for byte -------------------

std::string criterion_turtle_roundtrip() {
  auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < 100; ++i) {
    auto corpus = synthetic_corpus(6000 + static_cast<std::uint64_t>(i),
                                   3 + static_cast<std::size_t>(i % 12));
    ConvertOptions opts;
    opts.with_disjointness = i % 2 == 0;
    opts.with_derived_annotations = i % 3 == 0;
    auto built = materialize(corpus, opts);
    std::string once = emit_turtle(built.kb, hier());
    KnowledgeBase reread = parse_turtle(once, hier());
    std::string twice = emit_turtle(reread, hier());
    if (once != twice)
      return "document " + std::to_string(i) + " changed across a round trip";
    if (reread.individuals != built.kb.individuals ||
        reread.class_assertions != built.kb.class_assertions ||
        reread.object_assertions != built.kb.object_assertions ||
        reread.data_assertions != built.kb.data_assertions ||
        reread.disjoint_classes != built.kb.disjoint_classes ||
        reread.annotations != built.kb.annotations)
      return "store " + std::to_string(i) + " changed across a round trip";
  }
  double secs = seconds_since(t0);
  if (secs >= 10.0) return over_budget(secs, 10);
  return {};
}

// --- criterion 10: histograms match a direct recount ------------------------

std::string criterion_histograms() {
  SyntheticOptions so;
  so.malware_high_entropy_rate = 0.30;
  so.benign_high_entropy_rate = 0.05;
  auto corpus = synthetic_corpus(31337, 10000, so);

  Histogram entropy = make_histogram(0.0, 8.0, 64);
  Histogram imports = make_histogram(0.0, 512.0, 64);
  for (const auto& s : corpus) {
    add_section_entropies(entropy, s);
    add_imports_count(imports, s);
  }

  auto recount_bin = [](double value, double lo, double hi, std::size_t bins) {
    if (value < lo) return std::size_t{0};
    if (value >= hi) return bins - 1;
    auto idx = static_cast<std::size_t>((value - lo) / (hi - lo) *
                                        static_cast<double>(bins));
    return idx >= bins ? bins - 1 : idx;
  };
  std::vector<std::size_t> em(64, 0), eb(64, 0), im(64, 0), ib(64, 0);
  for (const auto& s : corpus) {
    if (!s.labeled()) continue;
    for (const auto& sec : s.sections)
      ++(s.malware() ? em : eb)[recount_bin(sec.entropy, 0.0, 8.0, 64)];
    ++(s.malware() ? im : ib)[recount_bin(
        static_cast<double>(s.general.imports_count), 0.0, 512.0, 64)];
  }
  if (entropy.malware != em || entropy.benign != eb)
    return "entropy counts differ from the recount";
  if (imports.malware != im || imports.benign != ib)
    return "imports counts differ from the recount";

  std::size_t malware_hot = 0;
  std::size_t benign_hot = 0;
  for (std::size_t i = 56; i < 64; ++i) {
    malware_hot += entropy.malware[i];
    benign_hot += entropy.benign[i];
  }
  if (malware_hot <= benign_hot)
    return "malware mass above 7.0 (" + std::to_string(malware_hot) +
           ") does not exceed benign (" + std::to_string(benign_hot) + ")";
  return {};
}

struct Gate {
  int failures = 0;

  void run(int number, const char* title, const std::function<std::string()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    std::string problem;
    try {
      problem = body();
    } catch (const std::exception& e) {
      problem = std::string("exception: ") + e.what();
    }
    double secs = seconds_since(t0);
    if (problem.empty())
      std::printf("[PASS] criterion %d: %s (%.2fs)\n", number, title, secs);
    else {
      std::printf("[FAIL] criterion %d: %s: %s\n", number, title, problem.c_str());
      ++failures;
    }
    std::fflush(stdout);
  }
};

}  // namespace

int main() {
  Gate gate;
  gate.run(1, "frozen corpus materializes to the golden document", criterion_golden);
  gate.run(2, "derived assertions match their defining rules on 1000 records",
           criterion_feature_oracle);
  gate.run(3, "entropy and imports thresholds are strict", criterion_thresholds);
  gate.run(4, "balanced draws are exact, repeatable and disjoint", criterion_sampling);
  gate.run(5, "classification metrics satisfy their identities",
           criterion_metric_identities);
  gate.run(6, "indexed evaluation agrees with the reference checker to length 7",
           criterion_evaluator_oracle);
  gate.run(7, "planted class expressions are recovered by every learner",
           criterion_planted_learning);
  gate.run(8, "refinements never grow the extension", criterion_refinement_soundness);
  gate.run(9, "documents survive a parse and re-emit byte for byte",
           criterion_turtle_roundtrip);
  gate.run(10, "histograms match a direct recount and separate the labels",
           criterion_histograms);
  if (gate.failures) {
    std::printf("%d criteria failed\n", gate.failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
