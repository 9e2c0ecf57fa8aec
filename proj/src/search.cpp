#include "auth/search.hpp"

#include <cmath>
#include <memory>
#include <utility>

namespace auth {

namespace {

void validate_params(const SearchParams& params) {
  if (!(params.delta > 0.0) || !(params.delta < 1.0)) {
    throw std::invalid_argument("delta must lie in (0,1)");
  }
  if (params.node_limit && *params.node_limit == 0) {
    throw std::invalid_argument("node limit must be positive");
  }
}

struct Frame {
  std::shared_ptr<const PartialTruthTable> table;
  std::uint32_t index;
};

// Depth-first branch and bound over the sorted scenario list. Tables are
// shared between a node and its exclude child; only include branches copy.
class Engine {
 public:
  Engine(const ScenarioList& list, double delta, bool prune_needs_best,
         std::optional<std::uint64_t> node_limit)
      : list_(list),
        delta_(delta),
        prune_needs_best_(prune_needs_best),
        node_limit_(node_limit) {}

  void run(const PartialTruthTable& root) {
    std::vector<Frame> stack;
    stack.push_back({std::make_shared<const PartialTruthTable>(root), 0});
    while (!stack.empty()) {
      if (node_limit_ && stats_.nodes_visited >= *node_limit_) {
        certified_ = false;
        break;
      }
      Frame frame = std::move(stack.back());
      stack.pop_back();
      visit(frame, stack);
    }
    if (!best_) {
      // Every completion seen so far scored zero and the strict-> update
      // never fired (possible when all scenario probabilities are zero).
      // Record the canonical completion so the result is a complete table.
      PartialTruthTable completed = complete_arbitrarily(root, list_, 0);
      best_prob_ = success_probability(completed, list_);
      best_ = std::make_shared<const PartialTruthTable>(std::move(completed));
      ++stats_.completions_evaluated;
      ++stats_.best_updates;
    }
  }

  const PartialTruthTable& best_table() const { return *best_; }
  double best_probability() const { return best_prob_; }
  const SearchStats& stats() const { return stats_; }
  bool certified() const { return certified_; }

 private:
  void visit(const Frame& frame, std::vector<Frame>& stack) {
    ++stats_.nodes_visited;
    const PartialTruthTable& table = *frame.table;
    const std::uint32_t index = frame.index;
    const double success = success_probability(table, list_);

    if (table.complete()) {
      ++stats_.completions_evaluated;
      consider(success, frame.table);
      return;
    }

    // Upper bound on what this branch can still gain: the highest-probability
    // scenarios beyond the current index that are still addable, capped by
    // the profile-size bound.
    const std::uint64_t cap = max_profile_additions(table);
    double cap_sum = 0.0;
    std::uint64_t taken = 0;
    const auto& entries = list_.entries;
    for (std::size_t j = index; j < entries.size() && taken < cap; ++j) {
      if (is_compatible(table, entries[j].scenario)) {
        cap_sum += entries[j].probability;
        ++taken;
      }
    }

    if (cap_sum == 0.0) {
      // Nothing addable is worth anything; finish the table and score it.
      auto completed = std::make_shared<const PartialTruthTable>(
          complete_arbitrarily(table, list_, index));
      ++stats_.completions_evaluated;
      consider(success_probability(*completed, list_), completed);
      return;
    }

    const double potential = success + cap_sum;
    if ((!prune_needs_best_ || best_prob_ > 0.0) && best_ && best_prob_ > potential - delta_) {
      ++stats_.branches_pruned;
      return;
    }

    // cap_sum > 0 guarantees a compatible entry at or after index, so the
    // index is in range here.
    const Scenario& next = entries[index].scenario;
    stack.push_back({frame.table, index + 1});  // exclude branch, explored second
    if (is_compatible(table, next)) {
      stack.push_back({std::make_shared<const PartialTruthTable>(update_with_scenario(table, next)),
                       index + 1});  // include branch, explored first
    }
  }

  void consider(double probability, std::shared_ptr<const PartialTruthTable> table) {
    // Strict improvement only: ties keep the earlier, more greedy-aligned table.
    if (!best_ || probability > best_prob_) {
      best_prob_ = probability;
      best_ = std::move(table);
      ++stats_.best_updates;
    }
  }

  const ScenarioList& list_;
  double delta_;
  bool prune_needs_best_;
  std::optional<std::uint64_t> node_limit_;

  std::shared_ptr<const PartialTruthTable> best_;
  double best_prob_ = 0.0;
  SearchStats stats_;
  bool certified_ = true;
};

SearchResult run_search(const FaultModel& model, const SearchParams& params,
                        const ScenarioList& scenarios, double delta, bool prune_needs_best) {
  const auto start = std::chrono::steady_clock::now();
  Engine engine(scenarios, delta, prune_needs_best, params.node_limit);
  engine.run(PartialTruthTable::fresh(model.size()));
  SearchResult result{engine.best_table(), engine.best_probability(), params, engine.stats(),
                      engine.certified()};
  result.stats.elapsed = std::chrono::steady_clock::now() - start;
  return result;
}

}  // namespace

SearchResult scenario_based_search(const FaultModel& model, const SearchParams& params,
                                   const ScenarioList& scenarios) {
  validate_params(params);
  if (scenarios.n != model.size()) {
    throw std::invalid_argument("scenario list does not match the model");
  }
  return run_search(model, params, scenarios, params.delta, /*prune_needs_best=*/true);
}

SearchResult scenario_based_search(const FaultModel& model, const SearchParams& params) {
  validate_params(params);
  const ScenarioList scenarios = enumerate_viable(model, params.drop_zero);
  return run_search(model, params, scenarios, params.delta, /*prune_needs_best=*/true);
}

SearchResult exact_scenario_search(const FaultModel& model) {
  SearchParams params;
  params.delta = 1e-5;  // carried in the result for reporting; not used to prune
  const ScenarioList scenarios = enumerate_viable(model, params.drop_zero);
  return run_search(model, params, scenarios, /*delta=*/0.0, /*prune_needs_best=*/false);
}

std::vector<double> addable_probabilities(const PartialTruthTable& t, const ScenarioList& list,
                                          std::size_t from_index) {
  if (from_index > list.entries.size()) {
    throw std::out_of_range("addable_probabilities index beyond the list");
  }
  std::vector<double> probabilities;
  for (std::size_t i = from_index; i < list.entries.size(); ++i) {
    if (is_compatible(t, list.entries[i].scenario)) {
      probabilities.push_back(list.entries[i].probability);
    }
  }
  return probabilities;
}

bool certify(const SearchResult& result, const FaultModel& model) {
  if (result.best_table.n() != model.size()) return false;
  if (!result.best_table.complete()) return false;
  if (!is_monotone(result.best_table)) return false;
  const ScenarioList scenarios = enumerate_viable(model, result.params.drop_zero);
  const double recomputed = success_probability(result.best_table, scenarios);
  return std::abs(recomputed - result.success_probability) <= 1e-12;
}

}  // namespace auth
