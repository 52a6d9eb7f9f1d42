#include "peonto/pipeline.hpp"

#include <atomic>
#include <charconv>
#include <set>
#include <thread>

namespace peonto {
namespace {

std::string number_text(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

}  // namespace

std::vector<std::pair<std::string, std::string>> derived_feature_notes(
    const Thresholds& thresholds) {
  std::string names;
  for (const auto& name : thresholds.standard_section_names) {
    if (!names.empty()) names += ", ";
    names += name;
  }

  std::vector<std::pair<std::string, std::string>> notes;
  notes.emplace_back(feature_id(FileFeature::Exports), "exports_count > 0");
  notes.emplace_back(feature_id(FileFeature::LowImportsCount),
                     "imports_count < " + std::to_string(thresholds.imports_threshold));
  notes.emplace_back(feature_id(FileFeature::MultipleExecutableSections),
                     "more than one section with flag executable");
  notes.emplace_back(feature_id(FileFeature::NonstandardMz),
                     thresholds.mz_rule == MzRule::Prose ? "mz_count <> 1"
                                                         : "mz_count > 1");
  notes.emplace_back(feature_id(FileFeature::PathStrings), "paths_count > 0");
  notes.emplace_back(feature_id(FileFeature::RegistryStrings), "registry_count > 0");
  notes.emplace_back(feature_id(FileFeature::Symbols), "symbols_count > 0");
  notes.emplace_back(feature_id(FileFeature::UrlStrings), "urls_count > 0");
  notes.emplace_back(section_feature_id(SectionFeature::HighEntropy),
                     "section_entropy > " + number_text(thresholds.entropy_threshold));
  notes.emplace_back(section_feature_id(SectionFeature::NonstandardSectionName),
                     "section_name not in {" + names + "}");
  notes.emplace_back(section_feature_id(SectionFeature::WriteExecuteSection),
                     "flags writable and executable on one section");
  return notes;
}

Materialized materialize(const std::vector<RawSample>& samples,
                         const ConvertOptions& options) {
  options.thresholds.validate();
  const ActionVocabulary& vocab =
      options.vocabulary ? *options.vocabulary : default_vocabulary();

  Materialized out;
  out.kb.base_iri = options.iri.base;

  // Local names first: collisions depend on input order, the rest does not.
  std::vector<std::string> locals(samples.size());
  std::map<std::string, std::size_t> uses;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    std::size_t n = ++uses[samples[i].md5];
    if (n == 1) {
      locals[i] = samples[i].md5;
    } else {
      locals[i] = samples[i].md5 + "_" + std::to_string(n);
      ++out.stats.renamed_iris;
      out.stats.warnings.push_back("duplicate sample iri " + samples[i].md5 +
                                   ", renamed to " + locals[i]);
    }
  }

  std::vector<KnowledgeBase> parts(samples.size());
  auto build_one = [&](std::size_t i) {
    const RawSample& sample = samples[i];
    FileKind kind = classify_file_kind(sample);
    SectionDerivation sections = derive_sections(sample, options.thresholds);
    std::set<FileFeature> features =
        derive_file_features(sample, sections.entry, options.thresholds);
    std::set<std::string> actions = map_imports(sample.imports, vocab);
    parts[i] = build_kb(sample, kind, features, sections.profiles, actions,
                        options.iri, locals[i]);
  };

  unsigned workers = std::max(1u, options.workers);
  if (workers == 1 || samples.size() < 2) {
    for (std::size_t i = 0; i < samples.size(); ++i) build_one(i);
  } else {
    std::atomic<std::size_t> next{0};
    auto run = [&] {
      for (std::size_t i = next.fetch_add(1); i < samples.size();
           i = next.fetch_add(1))
        build_one(i);
    };
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(run);
    run();
    for (auto& t : pool) t.join();
  }

  for (const auto& part : parts) out.kb.merge(part);

  if (options.with_disjointness) {
    ClassHierarchy hierarchy = ClassHierarchy::standard(vocab);
    for (const auto& pair : hierarchy.disjoint_root_pairs())
      out.kb.disjoint_classes.insert(pair);
  }
  if (options.with_derived_annotations) {
    for (const auto& [proto, text] : derived_feature_notes(options.thresholds))
      out.kb.annotations.emplace(proto, "derived_as", text);
  }

  out.stats.samples = samples.size();
  out.stats.metrics = dataset_metrics(out.kb);
  return out;
}

}  // namespace peonto
