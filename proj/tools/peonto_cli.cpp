#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "peonto/concepts.hpp"
#include "peonto/ember.hpp"
#include "peonto/evaluator.hpp"
#include "peonto/learner.hpp"
#include "peonto/pipeline.hpp"
#include "peonto/sampler.hpp"
#include "peonto/stats.hpp"
#include "peonto/turtle.hpp"

namespace {

using nlohmann::json;
using namespace peonto;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

struct AppConfig {
  Thresholds thresholds;
  std::string actions_config;  // path; empty -> built-in vocabulary
  std::string base_iri = kDefaultBaseIri;
  std::string mode = "ember";
  bool strict = false;
  std::string out_dir = ".";
};

class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot open " + path + " for writing");
  out << text;
  if (!out) throw DataError("write failed: " + path);
}

std::set<std::string> parse_name_list(const std::string& spec) {
  std::set<std::string> names;
  std::string cur;
  for (char c : spec) {
    if (c == ',') {
      if (!cur.empty()) names.insert(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) names.insert(cur);
  return names;
}

std::set<std::string> read_name_file(const std::string& path) {
  std::set<std::string> names;
  std::istringstream in(read_file(path));
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back())))
      line.pop_back();
    std::size_t start = 0;
    while (start < line.size() &&
           std::isspace(static_cast<unsigned char>(line[start])))
      ++start;
    if (start < line.size()) names.insert(line.substr(start));
  }
  return names;
}

MzRule mz_rule_from(const std::string& name) {
  if (name == "prose") return MzRule::Prose;
  if (name == "annotation") return MzRule::Annotation;
  throw DataError("mz rule must be prose or annotation, got " + name);
}

AppConfig load_env_config() {
  AppConfig config;
  const char* path = std::getenv("PEONTO_CONFIG");
  if (!path || !*path) return config;

  json doc;
  try {
    doc = json::parse(read_file(path));
  } catch (const json::exception& e) {
    throw DataError(std::string("config file ") + path + ": " + e.what());
  }
  if (!doc.is_object()) throw DataError(std::string("config file ") + path +
                                        ": expected a JSON object");

  if (doc.contains("imports_threshold"))
    config.thresholds.imports_threshold = doc["imports_threshold"].get<std::uint64_t>();
  if (doc.contains("entropy_threshold"))
    config.thresholds.entropy_threshold = doc["entropy_threshold"].get<double>();
  if (doc.contains("mz_rule"))
    config.thresholds.mz_rule = mz_rule_from(doc["mz_rule"].get<std::string>());
  if (doc.contains("section_names")) {
    const auto& v = doc["section_names"];
    if (v.is_string())
      config.thresholds.standard_section_names = read_name_file(v.get<std::string>());
    else
      config.thresholds.standard_section_names =
          std::set<std::string>(v.begin(), v.end());
  }
  if (doc.contains("actions_config"))
    config.actions_config = doc["actions_config"].get<std::string>();
  if (doc.contains("base_iri")) config.base_iri = doc["base_iri"].get<std::string>();
  if (doc.contains("mode")) config.mode = doc["mode"].get<std::string>();
  if (doc.contains("strict")) config.strict = doc["strict"].get<bool>();
  if (doc.contains("out_dir")) config.out_dir = doc["out_dir"].get<std::string>();
  return config;
}

// Flags shared by every command that derives features or builds the taxonomy.
struct CommonOpts {
  explicit CommonOpts(AppConfig* app_config) : config(app_config) {}

  AppConfig* config;
  std::string section_names_flag;

  void attach(CLI::App* cmd) {
    cmd->add_option("--imports-threshold", config->thresholds.imports_threshold,
                    "Counts strictly below are low_imports_count");
    cmd->add_option("--entropy-threshold", config->thresholds.entropy_threshold,
                    "Entropies strictly above are high_entropy");
    cmd->add_option_function<std::string>(
        "--mz-rule",
        [this](const std::string& v) { config->thresholds.mz_rule = mz_rule_from(v); },
        "nonstandard_mz reading: prose (count != 1) or annotation (count > 1)");
    cmd->add_option("--section-names", section_names_flag,
                    "Comma-separated standard section names");
    cmd->add_option("--actions-config", config->actions_config,
                    "JSON file with api_to_action / action_to_category tables");
    cmd->add_option("--base-iri", config->base_iri, "Ontology IRI prefix");
  }

  void resolve() {
    if (!section_names_flag.empty())
      config->thresholds.standard_section_names = parse_name_list(section_names_flag);
    config->thresholds.validate();
  }

  const ActionVocabulary& vocabulary() {
    if (config->actions_config.empty()) return default_vocabulary();
    if (!loaded_) {
      actions_ = load_vocabulary_file(config->actions_config);
      loaded_ = true;
    }
    return actions_;
  }

 private:
  ActionVocabulary actions_;
  bool loaded_ = false;
};

std::vector<RawSample> load_records(const std::string& path, bool strict,
                                    std::vector<std::string>* warnings) {
  DatasetParse parsed;
  if (path == "-") {
    parsed = parse_dataset(std::cin, strict);
  } else {
    parsed = parse_dataset_file(path, strict);
  }
  for (const auto& err : parsed.errors)
    if (warnings)
      warnings->push_back("line " + std::to_string(err.line_number) + ": " +
                          err.message);
  return std::move(parsed.samples);
}

json metrics_json(const Metrics& m) {
  return json{{"accuracy", m.accuracy},
              {"precision", m.precision},
              {"recall", m.recall},
              {"fp_rate", m.fp_rate},
              {"f1", m.f1}};
}

// ---------------------------------------------------------------- convert --

int cmd_convert(const std::string& input, const std::string& output,
                AppConfig& config, CommonOpts& common, bool with_disjointness,
                bool with_annotations, unsigned workers) {
  common.resolve();
  std::vector<std::string> warnings;
  std::vector<RawSample> records = load_records(input, config.strict, &warnings);

  ConvertOptions options;
  options.thresholds = config.thresholds;
  const ActionVocabulary& vocab = common.vocabulary();
  options.vocabulary = &vocab;
  options.iri.base = config.base_iri;
  options.with_disjointness = with_disjointness;
  options.with_derived_annotations = with_annotations;
  options.workers = workers;

  Materialized result = materialize(records, options);
  ClassHierarchy hierarchy = ClassHierarchy::standard(vocab);
  write_file(output, emit_turtle(result.kb, hierarchy));

  for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
  for (const auto& w : result.stats.warnings) std::cerr << "warning: " << w << "\n";
  std::cerr << "samples: " << result.stats.samples << "\n"
            << "individuals: " << result.stats.metrics.individuals << "\n"
            << "class assertions: " << result.stats.metrics.class_assertions << "\n"
            << "object assertions: " << result.stats.metrics.object_assertions << "\n"
            << "data assertions: " << result.stats.metrics.data_assertions << "\n"
            << "total axioms: " << result.stats.metrics.total_axioms << "\n";
  return kExitOk;
}

// ----------------------------------------------------------------- sample --

int cmd_sample(const std::string& input, AppConfig& config, CommonOpts& common,
               std::size_t size, unsigned variant, std::uint64_t seed,
               bool with_disjointness, bool with_annotations, unsigned workers) {
  common.resolve();
  SamplePlan plan;
  plan.size = size;
  plan.seed = seed;
  plan.variant = variant;
  if (config.mode == "ember")
    plan.mode = SampleMode::TwoWay;
  else if (config.mode == "sorel")
    plan.mode = SampleMode::FourWay;
  else
    throw DataError("mode must be ember or sorel, got " + config.mode);

  std::vector<std::string> warnings;
  std::vector<RawSample> records = load_records(input, config.strict, &warnings);
  FractionDraw draw = sample_fraction(records, plan);

  std::vector<RawSample> chosen;
  chosen.reserve(draw.selected.size());
  std::string raw_lines;
  json positives = json::array();
  json negatives = json::array();
  for (std::size_t idx : draw.selected) {
    chosen.push_back(records[idx]);
    raw_lines += records[idx].raw_text;
    raw_lines += '\n';
    (records[idx].malware() ? positives : negatives).push_back(records[idx].md5);
  }

  ConvertOptions options;
  options.thresholds = config.thresholds;
  const ActionVocabulary& vocab = common.vocabulary();
  options.vocabulary = &vocab;
  options.iri.base = config.base_iri;
  options.with_disjointness = with_disjointness;
  options.with_derived_annotations = with_annotations;
  options.workers = workers;
  Materialized result = materialize(chosen, options);
  ClassHierarchy hierarchy = ClassHierarchy::standard(vocab);

  std::string stem = config.out_dir + "/dataset_" + std::to_string(variant) + "_" +
                     std::to_string(size);
  write_file(stem + ".owl", emit_turtle(result.kb, hierarchy));
  write_file(stem + "_raw.json", raw_lines);
  json manifest{{"negative", negatives}, {"positive", positives}};
  write_file(stem + "_examples.json", manifest.dump(2) + "\n");

  for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
  for (const auto& w : draw.warnings) std::cerr << "warning: " << w << "\n";
  std::cerr << "selected: " << draw.selected.size() << "\n";
  for (const auto& [stratum, population] : draw.stratum_population)
    std::cerr << "stratum " << stratum << ": " << population << " available\n";
  std::cerr << "wrote " << stem << ".owl, " << stem << "_raw.json, " << stem
            << "_examples.json\n";
  return kExitOk;
}

// ------------------------------------------------------------------ stats --

int cmd_stats(const std::string& input, AppConfig& config, const std::string& metric,
              std::size_t bins, std::vector<double> range, const std::string& output,
              const std::string& format) {
  char sep;
  if (format == "csv")
    sep = ',';
  else if (format == "tsv")
    sep = '\t';
  else
    throw DataError("format must be csv or tsv, got " + format);

  double lo, hi;
  if (range.size() == 2) {
    lo = range[0];
    hi = range[1];
  } else if (metric == "entropy") {
    lo = 0.0;
    hi = 8.0;
  } else {
    lo = 0.0;
    hi = 512.0;
  }

  std::vector<std::string> warnings;
  std::vector<RawSample> records = load_records(input, config.strict, &warnings);

  Histogram h = make_histogram(lo, hi, bins);
  if (metric == "entropy") {
    for (const auto& r : records) add_section_entropies(h, r);
  } else if (metric == "imports") {
    for (const auto& r : records) add_imports_count(h, r);
  } else {
    throw DataError("metric must be entropy or imports, got " + metric);
  }

  write_file(output, histogram_report(h, sep));
  for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
  std::cerr << "observations: malware " << h.malware_total() << ", benign "
            << h.benign_total() << "\n";
  return kExitOk;
}

// ------------------------------------------------------------------ learn --

LearningProblem load_examples(const std::string& path) {
  json doc;
  try {
    doc = json::parse(read_file(path));
  } catch (const json::exception& e) {
    throw DataError("examples file " + path + ": " + e.what());
  }
  if (!doc.is_object() || !doc.contains("positive") || !doc.contains("negative"))
    throw DataError("examples file " + path +
                    ": expected {\"positive\": [...], \"negative\": [...]}");
  LearningProblem problem;
  for (const auto& v : doc["positive"]) problem.positives.push_back(v.get<std::string>());
  for (const auto& v : doc["negative"]) problem.negatives.push_back(v.get<std::string>());
  return problem;
}

KnowledgeBase load_kb(const std::string& path, const ClassHierarchy& hierarchy) {
  try {
    return parse_turtle(read_file(path), hierarchy);
  } catch (const TurtleError& e) {
    throw DataError(path + ": " + e.what());
  }
}

std::string describe_result(const LearnResult& result, const CrossValidation* cv) {
  std::ostringstream out;
  out << "expression: " << render_concept(*result.expression) << "\n";
  if (!result.disjuncts.empty()) {
    out << "disjuncts: " << result.disjuncts.size() << "\n";
    for (const auto& d : result.disjuncts)
      out << "  " << render_concept(*d) << "\n";
  }
  out << "training accuracy: " << result.train_accuracy << "\n"
      << "nodes expanded: " << result.nodes_expanded << "\n"
      << "cpu seconds: " << result.cpu_seconds << "\n";
  if (result.budget_exhausted) out << "time budget exhausted\n";
  if (cv) {
    out << "cross-validation (" << cv->folds.size() << " folds):\n";
    auto line = [&](const char* name, double mean, double sd) {
      out << "  " << name << ": " << mean << " +/- " << sd << "\n";
    };
    line("accuracy", cv->mean.accuracy, cv->stddev.accuracy);
    line("precision", cv->mean.precision, cv->stddev.precision);
    line("recall", cv->mean.recall, cv->stddev.recall);
    line("fp_rate", cv->mean.fp_rate, cv->stddev.fp_rate);
    line("f1", cv->mean.f1, cv->stddev.f1);
  }
  return out.str();
}

int cmd_learn(const std::string& kb_path, const std::string& examples_path,
              AppConfig& config, CommonOpts& common, LearnerConfig& learner,
              unsigned folds, std::uint64_t seed, const std::string& output,
              bool report_times) {
  common.resolve();
  const ActionVocabulary& vocab = common.vocabulary();
  ClassHierarchy hierarchy = ClassHierarchy::standard(vocab);
  KnowledgeBase kb = load_kb(kb_path, hierarchy);
  KbIndex index(kb, hierarchy);
  LearningProblem problem = load_examples(examples_path);

  LearnResult result = learn(index, problem, learner);

  json report{{"algorithm", algorithm_name(learner.algorithm)},
              {"expression", render_concept(*result.expression)},
              {"train_accuracy", result.train_accuracy},
              {"nodes_expanded", result.nodes_expanded},
              {"budget_exhausted", result.budget_exhausted}};
  if (!result.disjuncts.empty()) {
    json arr = json::array();
    for (const auto& d : result.disjuncts) arr.push_back(render_concept(*d));
    report["disjuncts"] = arr;
  }

  CrossValidation cv;
  bool have_cv = folds >= 2;
  if (have_cv) {
    cv = cross_validate(index, problem, learner, folds, seed);
    json fold_rows = json::array();
    for (const auto& m : cv.folds) fold_rows.push_back(metrics_json(m));
    report["folds"] = fold_rows;
    report["mean"] = metrics_json(cv.mean);
    report["stddev"] = metrics_json(cv.stddev);
  }
  if (report_times) report["cpu_seconds"] = result.cpu_seconds;

  write_file(output, report.dump(2) + "\n");
  std::cerr << describe_result(result, have_cv ? &cv : nullptr);
  return kExitOk;
}

// --------------------------------------------------------------- evaluate --

int cmd_evaluate(const std::string& kb_path, const std::string& examples_path,
                 const std::string& expression_text, AppConfig&, CommonOpts& common,
                 const std::string& output) {
  common.resolve();
  const ActionVocabulary& vocab = common.vocabulary();
  ClassHierarchy hierarchy = ClassHierarchy::standard(vocab);
  KnowledgeBase kb = load_kb(kb_path, hierarchy);
  KbIndex index(kb, hierarchy);
  LearningProblem problem = load_examples(examples_path);

  ConceptPtr expr;
  try {
    expr = parse_concept(expression_text);
  } catch (const ConceptParseError& e) {
    throw DataError(std::string("expression: ") + e.what());
  }

  ConfusionMatrix cm =
      evaluate_concept(index, *expr, problem.positives, problem.negatives);
  Metrics metrics = compute_metrics(cm);

  json report{{"expression", render_concept(*expr)},
              {"confusion",
               {{"tp", cm.tp}, {"fp", cm.fp}, {"tn", cm.tn}, {"fn", cm.fn}}},
              {"metrics", metrics_json(metrics)}};
  write_file(output, report.dump(2) + "\n");
  std::cerr << "expression: " << render_concept(*expr) << "\n"
            << "tp " << cm.tp << ", fp " << cm.fp << ", tn " << cm.tn << ", fn "
            << cm.fn << "\n"
            << "accuracy " << metrics.accuracy << ", f1 " << metrics.f1 << "\n";
  return kExitOk;
}

// ------------------------------------------------------------------ config --

int cmd_config_show(AppConfig& config, CommonOpts& common) {
  common.resolve();
  json names = json::array();
  for (const auto& n : config.thresholds.standard_section_names) names.push_back(n);
  json doc{{"imports_threshold", config.thresholds.imports_threshold},
           {"entropy_threshold", config.thresholds.entropy_threshold},
           {"mz_rule",
            config.thresholds.mz_rule == MzRule::Prose ? "prose" : "annotation"},
           {"section_names", names},
           {"actions_config",
            config.actions_config.empty() ? "(built-in)" : config.actions_config},
           {"base_iri", config.base_iri},
           {"mode", config.mode},
           {"strict", config.strict},
           {"out_dir", config.out_dir}};
  std::cout << doc.dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"PE malware ontology toolkit"};
  app.require_subcommand(1);

  AppConfig config;
  try {
    config = load_env_config();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }

  std::string input = "-";
  std::string output = "-";
  unsigned workers = 1;

  // convert
  auto* convert = app.add_subcommand("convert", "Dataset JSON lines to Turtle");
  CommonOpts convert_common(&config);
  convert->add_option("--input,-i", input, "JSON-lines dataset; - for stdin");
  convert->add_option("--output,-o", output, "Turtle output; - for stdout");
  convert->add_flag("--strict", config.strict, "Abort on the first bad line");
  bool with_disjointness = false;
  bool with_annotations = false;
  convert->add_flag("--with-disjointness", with_disjointness,
                    "Emit disjointness axioms for the top-level families");
  convert->add_flag("--with-derived-annotations", with_annotations,
                    "Annotate derived feature prototypes with their definitions");
  convert->add_option("--workers", workers, "Parallel sample materialization");
  convert_common.attach(convert);

  // sample
  auto* sample = app.add_subcommand("sample", "Draw a balanced fractional dataset");
  CommonOpts sample_common(&config);
  std::size_t size = 0;
  unsigned variant = 1;
  std::uint64_t seed = 1;
  sample->add_option("--input,-i", input, "JSON-lines dataset; - for stdin");
  sample->add_option("--size", size, "Total samples drawn")->required();
  sample->add_option("--variant", variant, "1-based variant number");
  sample->add_option("--seed", seed, "Sampling seed");
  sample->add_option("--mode", config.mode, "ember (2 strata) or sorel (4 strata)");
  sample->add_option("--out", config.out_dir, "Output directory");
  sample->add_flag("--strict", config.strict, "Abort on the first bad line");
  sample->add_flag("--with-disjointness", with_disjointness,
                   "Emit disjointness axioms for the top-level families");
  sample->add_flag("--with-derived-annotations", with_annotations,
                   "Annotate derived feature prototypes with their definitions");
  sample->add_option("--workers", workers, "Parallel sample materialization");
  sample_common.attach(sample);

  // stats
  auto* stats = app.add_subcommand("stats", "Histogram report by label");
  std::string metric = "entropy";
  std::size_t bins = 64;
  std::vector<double> range;
  std::string format = "csv";
  stats->add_option("--input,-i", input, "JSON-lines dataset; - for stdin");
  stats->add_option("--metric", metric, "entropy or imports");
  stats->add_option("--bins", bins, "Bin count");
  stats->add_option("--range", range, "Low and high edge")->expected(2);
  stats->add_option("--out", output, "Report file; - for stdout");
  stats->add_option("--format", format, "csv or tsv");
  stats->add_flag("--strict", config.strict, "Abort on the first bad line");

  // learn
  auto* learn_cmd = app.add_subcommand("learn", "Learn a class expression");
  CommonOpts learn_common(&config);
  LearnerConfig learner;
  std::string kb_path, examples_path, algorithm = "parcel";
  std::string has_value = "off", negation = "off", unions = "on";
  unsigned folds = 5;
  bool report_times = false;
  learn_cmd->add_option("--kb", kb_path, "Turtle knowledge base")->required();
  learn_cmd->add_option("--examples", examples_path,
                        "JSON {\"positive\": [...], \"negative\": [...]}")
      ->required();
  learn_cmd->add_option("--algorithm", algorithm, "parcel, sparcel, ocel or celoe");
  learn_cmd->add_option("--noise", learner.noise, "Tolerated misclassification, percent");
  learn_cmd->add_option("--has-value", has_value, "on/off: value restrictions");
  learn_cmd->add_option("--negation", negation, "on/off: complement");
  learn_cmd->add_option("--union", unions, "on/off: disjunction of siblings");
  learn_cmd->add_option("--cardinality-limit", learner.cardinality_limit,
                        "Highest n in min-n restrictions; 0 disables");
  learn_cmd->add_option("--time-budget", learner.time_budget_seconds,
                        "CPU user-time budget in seconds; 0 = unlimited");
  learn_cmd->add_option("--workers", learner.workers, "Evaluation worker threads");
  learn_cmd->add_option("--folds", folds, "Cross-validation folds; <2 skips CV");
  learn_cmd->add_option("--seed", seed, "Fold assignment seed");
  learn_cmd->add_option("--max-length", learner.max_expression_length,
                        "Longest candidate expression");
  learn_cmd->add_option("--domain", learner.domain, "Class whose instances are described");
  learn_cmd->add_option("--out", output, "Report JSON; - for stdout");
  learn_cmd->add_flag("--report-times", report_times,
                      "Include cpu_seconds in the JSON report");
  learn_common.attach(learn_cmd);

  // evaluate
  auto* evaluate = app.add_subcommand("evaluate", "Score an expression on examples");
  CommonOpts evaluate_common(&config);
  std::string expression_text;
  evaluate->add_option("--kb", kb_path, "Turtle knowledge base")->required();
  evaluate->add_option("--examples", examples_path,
                       "JSON {\"positive\": [...], \"negative\": [...]}")
      ->required();
  evaluate->add_option("--concept", expression_text, "Expression to score")->required();
  evaluate->add_option("--out", output, "Report JSON; - for stdout");
  evaluate_common.attach(evaluate);

  // config show
  auto* config_cmd = app.add_subcommand("config", "Configuration helpers");
  config_cmd->require_subcommand(1);
  auto* config_show = config_cmd->add_subcommand("show", "Print the resolved settings");
  CommonOpts config_common(&config);
  config_common.attach(config_show);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp") {
      app.exit(e);
      return kExitOk;
    }
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (convert->parsed())
      return cmd_convert(input, output, config, convert_common, with_disjointness,
                         with_annotations, workers);
    if (sample->parsed())
      return cmd_sample(input, config, sample_common, size, variant, seed,
                        with_disjointness, with_annotations, workers);
    if (stats->parsed())
      return cmd_stats(input, config, metric, bins, range, output, format);
    if (learn_cmd->parsed()) {
      learner.algorithm = algorithm_from_name(algorithm);
      for (const auto* toggle : {&has_value, &negation, &unions})
        if (*toggle != "on" && *toggle != "off")
          throw std::invalid_argument("expected on or off, got " + *toggle);
      learner.use_has_value = has_value == "on";
      learner.use_negation = negation == "on";
      learner.use_union = unions == "on";
      return cmd_learn(kb_path, examples_path, config, learn_common, learner, folds,
                       seed, output, report_times);
    }
    if (evaluate->parsed())
      return cmd_evaluate(kb_path, examples_path, expression_text, config,
                          evaluate_common, output);
    if (config_cmd->parsed()) return cmd_config_show(config, config_common);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}
