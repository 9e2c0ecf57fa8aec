#include <doctest.h>

#include "auth/baselines.hpp"
#include "auth/casestudy.hpp"
#include "auth/search.hpp"
#include "test_support.hpp"

using namespace auth;
using testsupport::scenario;

namespace {

FaultModel loss_pair() {
  return FaultModel({CredentialSpec::make(0.9, 0.1, 0, 0), CredentialSpec::make(0.9, 0.1, 0, 0)});
}

FaultModel loss_leak_pair() {
  return FaultModel({CredentialSpec::make(0.9, 0.1, 0, 0), CredentialSpec::make(0.9, 0, 0.1, 0)});
}

}  // namespace

TEST_CASE("search finds OR for the loss-only pair") {
  SearchParams params;
  params.delta = 1e-6;
  const SearchResult result = scenario_based_search(loss_pair(), params);
  CHECK(result.success_probability == doctest::Approx(0.99).epsilon(1e-12));
  const auto minimal = minimal_true_vectors(result.best_table);
  REQUIRE(minimal.size() == 2);
  CHECK(minimal[0].bits == 0b01u);
  CHECK(minimal[1].bits == 0b10u);
  CHECK(result.certified);
  CHECK(certify(result, loss_pair()));
}

TEST_CASE("search tops out at 0.9 when one credential leaks") {
  SearchParams params;
  params.delta = 1e-6;
  const SearchResult result = scenario_based_search(loss_leak_pair(), params);
  CHECK(result.success_probability == doctest::Approx(0.9).epsilon(1e-12));
}

TEST_CASE("wallet pair point: one weak credential on top of a 2-of-2 multisig") {
  SearchParams params;
  params.delta = 1e-6;
  const SearchResult result = scenario_based_search(wallet_model(2, 1), params);
  CHECK(result.best_table == wallet_reference(2, 1));
  CHECK(1.0 - result.success_probability == doctest::Approx(6.07e-3).epsilon(1e-9));
}

TEST_CASE("a single credential searches to the identity mechanism") {
  const FaultModel single({CredentialSpec::make(0.95, 0.02, 0.02, 0.01)});
  SearchParams params;
  params.delta = 1e-6;
  const SearchResult result = scenario_based_search(single, params);
  CHECK(result.best_table == table_from_minimal_true_vectors(1, {{0b1}}));
  CHECK(result.success_probability == doctest::Approx(0.95));  // succeeds iff safe
}

TEST_CASE("search parameter validation") {
  CHECK_THROWS_AS(scenario_based_search(loss_pair(), SearchParams{0.0, {}, true}),
                  std::invalid_argument);
  CHECK_THROWS_AS(scenario_based_search(loss_pair(), SearchParams{1.0, {}, true}),
                  std::invalid_argument);
  CHECK_THROWS_AS(scenario_based_search(loss_pair(), SearchParams{1e-6, std::uint64_t{0}, true}),
                  std::invalid_argument);
}

TEST_CASE("addable probabilities filter by compatibility from an index") {
  const FaultModel model = loss_pair();
  const ScenarioList list = enumerate_viable(model, /*drop_zero=*/false);

  const PartialTruthTable fresh2 = PartialTruthTable::fresh(2);
  const auto open = addable_probabilities(fresh2, list, 0);
  // Of the 7 viable scenarios only ((1,1),(0,0)) is already decided.
  CHECK(open.size() == 6);
  for (std::size_t i = 1; i < open.size(); ++i) CHECK(open[i - 1] >= open[i]);

  const PartialTruthTable c1 = update_with_scenario(fresh2, scenario(0b01, 0b10));
  CHECK(addable_probabilities(c1, list, 0).empty());  // complete table

  CHECK(addable_probabilities(fresh2, list, list.size()).empty());
  CHECK_THROWS_AS(addable_probabilities(fresh2, list, list.size() + 1), std::out_of_range);
}

TEST_CASE("certify rejects corrupted results") {
  SearchParams params;
  params.delta = 1e-6;
  const FaultModel model = loss_pair();
  SearchResult result = scenario_based_search(model, params);
  REQUIRE(certify(result, model));

  SearchResult wrong_prob = result;
  wrong_prob.success_probability += 1e-9;
  CHECK_FALSE(certify(wrong_prob, model));

  SearchResult broken = result;
  broken.best_table.force_row(0b11, Trit::False);  // all-ones row below a True row
  CHECK_FALSE(certify(broken, model));

  SearchResult incomplete = result;
  incomplete.best_table.force_row(0b01, Trit::Unset);
  CHECK_FALSE(certify(incomplete, model));
}

TEST_CASE("search is deterministic run to run") {
  std::mt19937_64 rng(9001);
  for (int trial = 0; trial < 10; ++trial) {
    const FaultModel model = testsupport::random_model(3, rng);
    SearchParams params;
    params.delta = 1e-7;
    const SearchResult a = scenario_based_search(model, params);
    const SearchResult b = scenario_based_search(model, params);
    CHECK(a.best_table == b.best_table);
    CHECK(a.success_probability == b.success_probability);
    CHECK(a.stats.nodes_visited == b.stats.nodes_visited);
    CHECK(a.stats.branches_pruned == b.stats.branches_pruned);
    CHECK(a.stats.completions_evaluated == b.stats.completions_evaluated);
    CHECK(a.stats.best_updates == b.stats.best_updates);
  }
}

TEST_CASE("search lands within delta of the exhaustive oracle") {
  std::mt19937_64 rng(9002);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 3);
    const FaultModel model = testsupport::random_model(n, rng);
    SearchParams params;
    params.delta = 1e-9;
    const SearchResult found = scenario_based_search(model, params);
    const ExhaustiveResult oracle = exhaustive_search(model);
    CHECK(found.success_probability >= oracle.success_probability - 1e-9);
    // Both sides evaluate over the same sorted list, so this holds exactly.
    CHECK(found.success_probability <= oracle.success_probability);
    CHECK(certify(found, model));
  }
}

TEST_CASE("vanishing delta reproduces the oracle optimum exactly") {
  std::mt19937_64 rng(9003);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 2);
    const FaultModel model = testsupport::random_model(n, rng);
    SearchParams params;
    params.delta = 1e-15;
    const SearchResult found = scenario_based_search(model, params);
    const ExhaustiveResult oracle = exhaustive_search(model);
    CHECK(found.success_probability == oracle.success_probability);
  }
  // The curated tie-heavy model from the worked examples.
  SearchParams params;
  params.delta = 1e-15;
  CHECK(scenario_based_search(loss_leak_pair(), params).success_probability ==
        exhaustive_search(loss_leak_pair()).success_probability);
}

TEST_CASE("pruning never loses more than delta against the unpruned run") {
  std::mt19937_64 rng(9004);
  for (int trial = 0; trial < 15; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 2);
    const FaultModel model = testsupport::random_model(n, rng);
    const SearchResult full = exact_scenario_search(model);
    for (double delta : {1e-2, 1e-6}) {
      SearchParams params;
      params.delta = delta;
      const SearchResult pruned = scenario_based_search(model, params);
      CHECK(full.success_probability <= pruned.success_probability + delta);
      CHECK(pruned.stats.nodes_visited <= full.stats.nodes_visited);
    }
  }
}

TEST_CASE("termination stays within the trivial node bound") {
  std::mt19937_64 rng(9005);
  for (int trial = 0; trial < 10; ++trial) {
    const FaultModel model = testsupport::random_model(2 + static_cast<int>(rng() % 2), rng);
    SearchParams params;
    params.delta = 1e-9;
    const ScenarioList list = enumerate_viable(model, params.drop_zero);
    const SearchResult result = scenario_based_search(model, params);
    REQUIRE(list.size() < 63);
    CHECK(result.stats.nodes_visited < (std::uint64_t{1} << (list.size() + 1)));
  }
}

TEST_CASE("node limit flags the result as non-certified but still complete") {
  SearchParams params;
  params.delta = 1e-9;
  params.node_limit = 2;
  const FaultModel model = uniform_model(4);
  const SearchResult result = scenario_based_search(model, params);
  CHECK_FALSE(result.certified);
  CHECK(result.best_table.complete());
  CHECK(is_monotone(result.best_table));
  CHECK(result.stats.nodes_visited <= 2);
  // The invariants that certify() checks still hold for the partial result.
  CHECK(certify(result, model));
}

TEST_CASE("degenerate model with zero-probability scenarios still yields a table") {
  // Nothing is ever safe, so every viable scenario has probability zero.
  const FaultModel hopeless({CredentialSpec::make(0, 1, 0, 0), CredentialSpec::make(0, 1, 0, 0)});
  SearchParams params;
  params.delta = 1e-6;
  const SearchResult result = scenario_based_search(hopeless, params);
  CHECK(result.best_table.complete());
  CHECK(result.success_probability == 0.0);
  CHECK(certify(result, hopeless));
}
