#include "peonto/learner.hpp"

#include <sys/resource.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <set>
#include <thread>

#include "peonto/refinement.hpp"
#include "peonto/rng.hpp"

namespace peonto {

double f1_score(double precision, double recall) {
  if (precision + recall == 0.0) return 0.0;
  return 2.0 * precision * recall / (precision + recall);
}

Metrics compute_metrics(const ConfusionMatrix& cm) {
  Metrics m;
  const double total = static_cast<double>(cm.total());
  m.accuracy = total > 0 ? static_cast<double>(cm.tp + cm.tn) / total : 0.0;
  m.precision =
      cm.tp + cm.fp ? static_cast<double>(cm.tp) / static_cast<double>(cm.tp + cm.fp)
                    : 0.0;
  m.recall =
      cm.tp + cm.fn ? static_cast<double>(cm.tp) / static_cast<double>(cm.tp + cm.fn)
                    : 0.0;
  m.fp_rate =
      cm.fp + cm.tn ? static_cast<double>(cm.fp) / static_cast<double>(cm.fp + cm.tn)
                    : 0.0;
  m.f1 = f1_score(m.precision, m.recall);
  return m;
}

ConfusionMatrix evaluate_concept(const KbIndex& index, const Concept& expression,
                                 const std::vector<std::string>& positives,
                                 const std::vector<std::string>& negatives) {
  Bitset ext = index.evaluate(expression);
  ConfusionMatrix cm;
  for (const auto& p : positives)
    ext.test(index.index_of(p)) ? ++cm.tp : ++cm.fn;
  for (const auto& n : negatives)
    ext.test(index.index_of(n)) ? ++cm.fp : ++cm.tn;
  return cm;
}

Algorithm algorithm_from_name(const std::string& name) {
  if (name == "parcel") return Algorithm::Parcel;
  if (name == "sparcel") return Algorithm::Sparcel;
  if (name == "ocel") return Algorithm::SingleOcel;
  if (name == "celoe") return Algorithm::SingleCeloe;
  throw std::invalid_argument("unknown algorithm: " + name);
}

std::string algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::Parcel: return "parcel";
    case Algorithm::Sparcel: return "sparcel";
    case Algorithm::SingleOcel: return "ocel";
    case Algorithm::SingleCeloe: return "celoe";
  }
  return "";
}

namespace {

double user_seconds() {
  rusage usage{};
  getrusage(RUSAGE_SELF, &usage);
  return static_cast<double>(usage.ru_utime.tv_sec) +
         static_cast<double>(usage.ru_utime.tv_usec) / 1e6;
}

struct Node {
  ConceptPtr expr;
  std::string key;
  int length = 0;
  double score = 0.0;
  Bitset pos_bits;  // coverage projected onto the positive examples
  Bitset neg_bits;  // coverage projected onto the negative examples
};

struct NodeOrder {
  bool operator()(const Node& a, const Node& b) const {
    if (a.score != b.score) return a.score > b.score;
    if (a.length != b.length) return a.length < b.length;
    return a.key < b.key;
  }
};

using Frontier = std::set<Node, NodeOrder>;

std::size_t scaled_allowance(double noise, std::size_t count, bool round_up) {
  double raw = noise * static_cast<double>(count) / 100.0;
  return static_cast<std::size_t>(round_up ? std::ceil(raw - 1e-9)
                                           : std::floor(raw + 1e-9));
}

class Search {
 public:
  Search(const KbIndex& index, const LearningProblem& problem,
         const LearnerConfig& config)
      : index_(index),
        config_(config),
        op_(index,
            RefinementConfig{config.use_negation, config.use_has_value,
                             config.use_union, config.cardinality_limit},
            config.domain),
        start_seconds_(user_seconds()) {
    for (const auto& name : problem.positives)
      pos_ids_.push_back(index.index_of(name));
    for (const auto& name : problem.negatives)
      neg_ids_.push_back(index.index_of(name));
  }

  std::size_t positives() const { return pos_ids_.size(); }
  std::size_t negatives() const { return neg_ids_.size(); }
  std::size_t expanded() const { return expanded_; }
  double elapsed() const { return user_seconds() - start_seconds_; }

  bool budget_left() const {
    if (config_.max_nodes && expanded_ >= config_.max_nodes) return false;
    if (config_.time_budget_seconds > 0 &&
        elapsed() > config_.time_budget_seconds)
      return false;
    return true;
  }

  Node build(const ConceptPtr& expr) const {
    Bitset ext = index_.evaluate(*expr);
    Node n;
    n.expr = expr;
    n.key = render_concept(*expr);
    n.length = concept_length(*expr);
    n.pos_bits = Bitset(pos_ids_.size());
    n.neg_bits = Bitset(neg_ids_.size());
    for (std::size_t i = 0; i < pos_ids_.size(); ++i)
      if (ext.test(pos_ids_[i])) n.pos_bits.set(i);
    for (std::size_t i = 0; i < neg_ids_.size(); ++i)
      if (ext.test(neg_ids_[i])) n.neg_bits.set(i);
    return n;
  }

  // Refines the node and evaluates every unseen candidate; candidate order is
  // fixed by the operator, so worker count never changes the result.
  std::vector<Node> expand(const Node& node) {
    ++expanded_;
    std::vector<ConceptPtr> fresh;
    for (auto& cand : op_.refine(node.expr, config_.max_expression_length)) {
      if (seen_.insert(render_concept(*cand)).second) fresh.push_back(std::move(cand));
    }

    std::vector<Node> nodes(fresh.size());
    unsigned workers = std::max(1u, config_.workers);
    if (workers == 1 || fresh.size() < 16) {
      for (std::size_t i = 0; i < fresh.size(); ++i) nodes[i] = build(fresh[i]);
    } else {
      std::atomic<std::size_t> next{0};
      auto run = [&] {
        for (std::size_t i = next.fetch_add(1); i < fresh.size();
             i = next.fetch_add(1))
          nodes[i] = build(fresh[i]);
      };
      std::vector<std::thread> pool;
      for (unsigned w = 1; w < workers; ++w) pool.emplace_back(run);
      run();
      for (auto& t : pool) t.join();
    }
    return nodes;
  }

  void mark_seen(const std::string& key) { seen_.insert(key); }

  double accuracy_of(const Node& n) const {
    std::size_t correct =
        n.pos_bits.count() + (neg_ids_.size() - n.neg_bits.count());
    std::size_t total = pos_ids_.size() + neg_ids_.size();
    return total ? static_cast<double>(correct) / static_cast<double>(total) : 0.0;
  }

 private:
  const KbIndex& index_;
  const LearnerConfig& config_;
  RefinementOperator op_;
  double start_seconds_;
  std::vector<std::size_t> pos_ids_;
  std::vector<std::size_t> neg_ids_;
  std::set<std::string> seen_;
  std::size_t expanded_ = 0;
};

LearnResult finish(Search& search, const KbIndex& index,
                   const LearningProblem& problem, ConceptPtr expression,
                   std::vector<ConceptPtr> disjuncts, bool budget_exhausted) {
  LearnResult result;
  result.expression = std::move(expression);
  result.disjuncts = std::move(disjuncts);
  result.budget_exhausted = budget_exhausted;
  result.nodes_expanded = search.expanded();
  result.cpu_seconds = search.elapsed();
  ConfusionMatrix cm =
      evaluate_concept(index, *result.expression, problem.positives, problem.negatives);
  result.train_accuracy = compute_metrics(cm).accuracy;
  return result;
}

// Union of partial definitions. Parcel accepts a candidate once its negative
// coverage fits the noise allowance; the symmetric variant insists on zero
// negatives but may subtract a union of counter definitions (descriptions
// covering only negatives) to get there, and uses noise only to stop early.
LearnResult learn_union(const KbIndex& index, const LearningProblem& problem,
                        const LearnerConfig& config) {
  Search search(index, problem, config);
  const std::size_t n_pos = search.positives();
  const std::size_t n_neg = search.negatives();
  const bool symmetric =
      config.algorithm == Algorithm::Sparcel && config.use_negation;
  const std::size_t neg_allowance =
      symmetric ? 0 : scaled_allowance(config.noise, n_neg, true);
  const std::size_t uncovered_allowance =
      symmetric ? scaled_allowance(config.noise, n_pos, false) : 0;

  Bitset uncovered(n_pos, true);
  std::vector<ConceptPtr> disjuncts;
  std::vector<Node> counters;
  std::vector<Node> blocked;

  auto parcel_score = [&](const Node& n) {
    std::size_t pos_u = n.pos_bits.intersect_count(uncovered);
    std::size_t denom = uncovered.count() + n_neg;
    return denom ? static_cast<double>(pos_u + (n_neg - n.neg_bits.count())) /
                       static_cast<double>(denom)
                 : 0.0;
  };

  Frontier frontier;
  {
    Node top = search.build(Concept::top());
    search.mark_seen(top.key);
    top.score = parcel_score(top);
    frontier.insert(std::move(top));
  }

  auto accept = [&](ConceptPtr expr, const Bitset& pos_bits) {
    disjuncts.push_back(std::move(expr));
    uncovered.subtract(pos_bits);
    Frontier rescored;
    for (auto& n : frontier) {
      Node copy = n;
      copy.score = parcel_score(copy);
      rescored.insert(std::move(copy));
    }
    frontier.swap(rescored);
  };

  // A mixed node joins the result once known counters wipe out its negatives.
  // Nodes whose positives are covered by now have nothing to add and drop out.
  auto try_subtract = [&](const Node& node) {
    if (node.pos_bits.intersect_count(uncovered) == 0) return true;
    Bitset remaining = node.neg_bits;
    std::vector<ConceptPtr> used;
    for (const auto& counter : counters) {
      if (remaining.none()) break;
      if (counter.neg_bits.intersect_count(remaining) == 0) continue;
      used.push_back(counter.expr);
      remaining.subtract(counter.neg_bits);
    }
    if (!remaining.none()) return false;
    accept(Concept::intersection(
               {node.expr, Concept::negation(Concept::union_of(std::move(used)))}),
           node.pos_bits);
    return true;
  };

  bool done = false;
  auto finished = [&] {
    if (symmetric) return uncovered.count() <= uncovered_allowance;
    return uncovered.none();
  };

  while (!done && !finished() && search.budget_left() && !frontier.empty()) {
    Node best = *frontier.begin();
    frontier.erase(frontier.begin());

    for (Node& node : search.expand(best)) {
      std::size_t pos_total = node.pos_bits.count();
      std::size_t pos_new = node.pos_bits.intersect_count(uncovered);
      std::size_t neg = node.neg_bits.count();

      if (symmetric && pos_total == 0) {
        if (neg > 0) {
          counters.push_back(node);
          std::erase_if(blocked, [&](const Node& b) { return try_subtract(b); });
          if (finished()) {
            done = true;
            break;
          }
        }
        continue;
      }
      if (pos_new == 0) continue;

      if (neg <= neg_allowance) {
        accept(node.expr, node.pos_bits);
        if (finished()) {
          done = true;
          break;
        }
        continue;
      }
      if (symmetric) {
        if (try_subtract(node)) {
          if (finished()) {
            done = true;
            break;
          }
          continue;
        }
        blocked.push_back(node);
      }
      node.score = parcel_score(node);
      frontier.insert(std::move(node));
    }
  }

  return finish(search, index, problem, Concept::union_of(disjuncts), disjuncts,
                !finished() && !search.budget_left());
}

// Single-expression search. The coverage-gated variant discards nodes that
// already miss too many positives (downward refinement cannot win them back)
// and stops at the first candidate inside both allowances; the penalized
// variant scores accuracy minus a length penalty and keeps the best node.
LearnResult learn_single(const KbIndex& index, const LearningProblem& problem,
                         const LearnerConfig& config) {
  Search search(index, problem, config);
  const std::size_t n_pos = search.positives();
  const std::size_t n_neg = search.negatives();
  const bool gated = config.algorithm == Algorithm::SingleOcel;
  const std::size_t min_pos = n_pos - scaled_allowance(config.noise, n_pos, false);
  const std::size_t max_neg = scaled_allowance(config.noise, n_neg, false);
  const double target_accuracy = 1.0 - config.noise / 100.0;

  auto score_of = [&](const Node& n) {
    double acc = search.accuracy_of(n);
    return gated ? acc : acc - config.celoe_length_penalty * n.length;
  };

  auto solves = [&](const Node& n) {
    return n.pos_bits.count() >= min_pos && n.neg_bits.count() <= max_neg &&
           search.accuracy_of(n) >= target_accuracy - 1e-12;
  };

  Frontier frontier;
  Node top = search.build(Concept::top());
  search.mark_seen(top.key);
  top.score = score_of(top);
  Node best = top;
  if (solves(top))
    return finish(search, index, problem, top.expr, {}, false);
  frontier.insert(std::move(top));

  while (search.budget_left() && !frontier.empty()) {
    Node head = *frontier.begin();
    frontier.erase(frontier.begin());

    for (Node& node : search.expand(head)) {
      if (gated && node.pos_bits.count() < min_pos) continue;
      node.score = score_of(node);
      if (node.score > best.score ||
          (node.score == best.score && NodeOrder{}(node, best)))
        best = node;
      if (solves(node))
        return finish(search, index, problem, node.expr, {}, false);
      frontier.insert(std::move(node));
    }
  }

  return finish(search, index, problem, best.expr, {}, !frontier.empty());
}

}  // namespace

LearnResult learn(const KbIndex& index, const LearningProblem& problem,
                  const LearnerConfig& config) {
  if (problem.positives.empty()) {
    Search search(index, problem, config);
    return finish(search, index, problem, Concept::bottom(), {}, false);
  }
  switch (config.algorithm) {
    case Algorithm::Parcel:
    case Algorithm::Sparcel:
      return learn_union(index, problem, config);
    case Algorithm::SingleOcel:
    case Algorithm::SingleCeloe:
      return learn_single(index, problem, config);
  }
  throw std::invalid_argument("unknown algorithm");
}

namespace {

std::vector<std::vector<std::string>> deal_folds(std::vector<std::string> items,
                                                 unsigned folds, std::mt19937_64& gen) {
  deterministic_shuffle(items, gen);
  std::vector<std::vector<std::string>> out(folds);
  for (std::size_t i = 0; i < items.size(); ++i)
    out[i % folds].push_back(std::move(items[i]));
  return out;
}

}  // namespace

CrossValidation cross_validate(const KbIndex& index, const LearningProblem& problem,
                               const LearnerConfig& config, unsigned folds,
                               std::uint64_t seed) {
  if (folds < 2) throw FoldError("need at least 2 folds");
  if (problem.positives.size() < folds)
    throw FoldError("positive class smaller than fold count: " +
                    std::to_string(problem.positives.size()) + " < " +
                    std::to_string(folds));
  if (problem.negatives.size() < folds)
    throw FoldError("negative class smaller than fold count: " +
                    std::to_string(problem.negatives.size()) + " < " +
                    std::to_string(folds));

  std::mt19937_64 pos_gen(mix_seed(seed, 1));
  std::mt19937_64 neg_gen(mix_seed(seed, 2));
  auto pos_folds = deal_folds(problem.positives, folds, pos_gen);
  auto neg_folds = deal_folds(problem.negatives, folds, neg_gen);

  CrossValidation cv;
  for (unsigned f = 0; f < folds; ++f) {
    LearningProblem train, test;
    test.positives = pos_folds[f];
    test.negatives = neg_folds[f];
    for (unsigned g = 0; g < folds; ++g) {
      if (g == f) continue;
      train.positives.insert(train.positives.end(), pos_folds[g].begin(),
                             pos_folds[g].end());
      train.negatives.insert(train.negatives.end(), neg_folds[g].begin(),
                             neg_folds[g].end());
    }
    LearnResult model = learn(index, train, config);
    ConfusionMatrix cm =
        evaluate_concept(index, *model.expression, test.positives, test.negatives);
    cv.folds.push_back(compute_metrics(cm));
  }

  auto fold_stats = [&](double Metrics::* field) {
    double sum = 0.0;
    for (const auto& m : cv.folds) sum += m.*field;
    double mean = sum / static_cast<double>(cv.folds.size());
    double var = 0.0;
    for (const auto& m : cv.folds) var += (m.*field - mean) * (m.*field - mean);
    double sd = cv.folds.size() > 1
                    ? std::sqrt(var / static_cast<double>(cv.folds.size() - 1))
                    : 0.0;
    return std::pair<double, double>(mean, sd);
  };

  std::tie(cv.mean.accuracy, cv.stddev.accuracy) = fold_stats(&Metrics::accuracy);
  std::tie(cv.mean.precision, cv.stddev.precision) = fold_stats(&Metrics::precision);
  std::tie(cv.mean.recall, cv.stddev.recall) = fold_stats(&Metrics::recall);
  std::tie(cv.mean.fp_rate, cv.stddev.fp_rate) = fold_stats(&Metrics::fp_rate);
  std::tie(cv.mean.f1, cv.stddev.f1) = fold_stats(&Metrics::f1);
  return cv;
}

}  // namespace peonto
