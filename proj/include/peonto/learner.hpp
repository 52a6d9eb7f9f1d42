#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "peonto/concepts.hpp"
#include "peonto/evaluator.hpp"

namespace peonto {

struct ConfusionMatrix {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t tn = 0;
  std::size_t fn = 0;

  std::size_t total() const { return tp + fp + tn + fn; }
};

struct Metrics {
  double accuracy = 0.0;
  double precision = 0.0;
  double recall = 0.0;
  double fp_rate = 0.0;
  double f1 = 0.0;
};

// Harmonic mean; 0 when both inputs are 0.
double f1_score(double precision, double recall);

Metrics compute_metrics(const ConfusionMatrix& cm);

ConfusionMatrix evaluate_concept(const KbIndex& index, const Concept& expression,
                                 const std::vector<std::string>& positives,
                                 const std::vector<std::string>& negatives);

// Parcel and Sparcel assemble a union of partial definitions; SingleOcel and
// SingleCeloe run one best-first search for a single expression.
enum class Algorithm { Parcel, Sparcel, SingleOcel, SingleCeloe };

Algorithm algorithm_from_name(const std::string& name);
std::string algorithm_name(Algorithm a);

struct LearnerConfig {
  Algorithm algorithm = Algorithm::Parcel;
  // Percentage of examples the result may misclassify, 0..100.
  double noise = 0.0;
  bool use_negation = false;
  bool use_has_value = false;
  bool use_union = true;
  unsigned cardinality_limit = 3;
  int max_expression_length = 11;
  // CPU user-time budget in seconds; 0 means unlimited.
  double time_budget_seconds = 0.0;
  unsigned workers = 1;
  double celoe_length_penalty = 0.02;
  std::string domain = "PEFile";
  // Stop after expanding this many nodes; 0 means unlimited.
  std::size_t max_nodes = 0;
};

struct LearningProblem {
  std::vector<std::string> positives;
  std::vector<std::string> negatives;
};

struct LearnResult {
  ConceptPtr expression;
  // Accepted partial definitions in acceptance order (union algorithms only).
  std::vector<ConceptPtr> disjuncts;
  bool budget_exhausted = false;
  double train_accuracy = 0.0;
  double cpu_seconds = 0.0;
  std::size_t nodes_expanded = 0;
};

LearnResult learn(const KbIndex& index, const LearningProblem& problem,
                  const LearnerConfig& config);

class FoldError : public std::runtime_error {
 public:
  explicit FoldError(const std::string& msg) : std::runtime_error(msg) {}
};

struct CrossValidation {
  std::vector<Metrics> folds;
  Metrics mean;
  Metrics stddev;  // sample standard deviation over folds
};

// Stratified k-fold cross validation: each class is shuffled with the seed
// and dealt round-robin, so per-class fold sizes differ by at most one.
// Throws FoldError when a class has fewer members than folds.
CrossValidation cross_validate(const KbIndex& index, const LearningProblem& problem,
                               const LearnerConfig& config, unsigned folds,
                               std::uint64_t seed);

}  // namespace peonto
