#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "auth/mechanism.hpp"

namespace auth {

struct SearchParams {
  /// Optimality slack: the result's success probability is at most delta
  /// below the optimum over all monotone Boolean mechanisms. Must lie in (0,1).
  double delta = 1e-5;
  /// Optional cap on visited nodes; when exhausted the best-so-far is
  /// returned with certified = false.
  std::optional<std::uint64_t> node_limit;
  /// Exclude zero-probability scenarios from the search list. They cannot
  /// change the success probability; completion fills the rows they touch.
  bool drop_zero = true;
};

struct SearchStats {
  std::uint64_t nodes_visited = 0;
  std::uint64_t branches_pruned = 0;
  std::uint64_t completions_evaluated = 0;
  std::uint64_t best_updates = 0;
  std::chrono::duration<double> elapsed{0};
};

struct SearchResult {
  PartialTruthTable best_table;
  double success_probability = 0.0;
  SearchParams params;
  SearchStats stats;
  /// False iff the node limit cut the search short; the delta guarantee
  /// then no longer holds.
  bool certified = true;
};

/// Branch-and-bound over the sorted viable-scenario list. Greedily tries to
/// include each scenario in probability order, keeping the partial table
/// monotone; stops a branch when the table is complete, when everything
/// still addable is worth zero, or when even the capped sum of addable
/// probabilities cannot beat the best found by more than delta. The returned
/// table is complete, monotone, and within params.delta of optimal.
SearchResult scenario_based_search(const FaultModel& model, const SearchParams& params);

/// Same search against a caller-built list (must match the params contract:
/// viable, sorted, positive-only iff params.drop_zero).
SearchResult scenario_based_search(const FaultModel& model, const SearchParams& params,
                                   const ScenarioList& scenarios);

/// Reference variant with delta treated as 0 and the found-a-best pruning
/// guard removed: prunes only branches that cannot strictly improve, so it
/// returns the exact optimum. Used to validate pruning soundness.
SearchResult exact_scenario_search(const FaultModel& model);

/// Probabilities of entries at index >= from_index that are still compatible
/// with t, in list order (descending).
std::vector<double> addable_probabilities(const PartialTruthTable& t, const ScenarioList& list,
                                          std::size_t from_index);

/// Re-checks the result invariants: table complete and monotone, stored
/// success probability within 1e-12 of re-evaluation on a freshly built list.
bool certify(const SearchResult& result, const FaultModel& model);

}  // namespace auth
