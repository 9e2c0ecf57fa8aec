#include "auth/baselines.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace auth {

MonotoneCatalog::MonotoneCatalog(int n, std::vector<std::uint64_t> functions)
    : n_(n), functions_(std::move(functions)) {}

PartialTruthTable MonotoneCatalog::table(std::size_t i) const {
  const std::uint64_t bits = functions_[i];
  PartialTruthTable t(n_);
  for (std::uint32_t v = 0; v < t.row_count(); ++v) {
    t.force_row(v, ((bits >> v) & 1u) ? Trit::True : Trit::False);
  }
  return t;
}

namespace {

// Row-string key with row 0 in the most significant position, so ascending
// keys give lexicographic order of the 2^n-character row string.
std::uint64_t lexicographic_key(std::uint64_t bits, std::uint32_t rows) {
  std::uint64_t key = 0;
  for (std::uint32_t v = 0; v < rows; ++v) {
    key = (key << 1) | ((bits >> v) & 1u);
  }
  return key;
}

// Packed DFS state: bit v of `trues`/`falses` carries the row value, and the
// precomputed closure masks make each assignment a single OR. Keeps the
// 7.8M-function n=6 catalog cheap.
struct PackedEnumerator {
  std::vector<std::uint64_t> up;    // up[v]: bit x set iff x covers v
  std::vector<std::uint64_t> down;  // down[v]: bit x set iff v covers x
  std::vector<std::uint32_t> order;
  std::vector<std::uint64_t> out;

  void walk(std::uint64_t trues, std::uint64_t falses, std::size_t position) {
    while (position < order.size()) {
      const std::uint32_t v = order[position];
      if (((trues | falses) >> v) & 1u) {
        ++position;
        continue;
      }
      walk(trues, falses | down[v], position + 1);
      walk(trues | up[v], falses, position + 1);
      return;
    }
    out.push_back(trues);
  }
};

}  // namespace

MonotoneCatalog enumerate_monotone(int n, bool allow_large) {
  if (n < 1 || n > 6 || (n == 6 && !allow_large)) {
    throw GuardError("monotone catalogs are limited to 5 credentials (6 behind a flag)");
  }
  const std::uint32_t rows = std::uint32_t{1} << n;
  PackedEnumerator enumerator;
  enumerator.up.assign(rows, 0);
  enumerator.down.assign(rows, 0);
  for (std::uint32_t v = 0; v < rows; ++v) {
    for (std::uint32_t x = 0; x < rows; ++x) {
      if ((x & v) == v) enumerator.up[v] |= std::uint64_t{1} << x;
      if ((x & v) == x) enumerator.down[v] |= std::uint64_t{1} << x;
    }
  }
  enumerator.order.resize(rows);
  std::iota(enumerator.order.begin(), enumerator.order.end(), 0u);
  std::sort(enumerator.order.begin(), enumerator.order.end(),
            [](std::uint32_t a, std::uint32_t b) {
              const int pa = std::popcount(a), pb = std::popcount(b);
              if (pa != pb) return pa < pb;
              return a < b;
            });

  enumerator.walk(0, 0, 0);
  std::vector<std::uint64_t> functions = std::move(enumerator.out);

  std::vector<std::pair<std::uint64_t, std::uint64_t>> keyed;
  keyed.reserve(functions.size());
  for (std::uint64_t bits : functions) {
    keyed.emplace_back(lexicographic_key(bits, rows), bits);
  }
  std::sort(keyed.begin(), keyed.end());
  keyed.erase(std::unique(keyed.begin(), keyed.end()), keyed.end());
  functions.clear();
  for (const auto& [key, bits] : keyed) functions.push_back(bits);
  return MonotoneCatalog(n, std::move(functions));
}

ExhaustiveResult exhaustive_search(const FaultModel& model, bool allow_large) {
  if (model.size() > 5 && !allow_large) {
    throw GuardError("exhaustive search is limited to 5 credentials");
  }
  const MonotoneCatalog catalog = enumerate_monotone(model.size(), allow_large);
  const ScenarioList scenarios = enumerate_viable(model, /*drop_zero=*/true);

  std::size_t best_index = 0;
  double best = -1.0;
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    const std::uint64_t bits = catalog.function_bits(i);
    double success = 0.0;
    for (const WeightedScenario& entry : scenarios.entries) {
      if (((bits >> entry.scenario.user.bits) & 1u) &&
          !((bits >> entry.scenario.attacker.bits) & 1u)) {
        success += entry.probability;
      }
    }
    if (success > best) {
      best = success;
      best_index = i;
    }
  }
  return {catalog.table(best_index), best};
}

PartialTruthTable threshold_table(int n, int k) {
  PartialTruthTable t(n);
  for (std::uint32_t v = 0; v < t.row_count(); ++v) {
    t.force_row(v, std::popcount(v) >= k ? Trit::True : Trit::False);
  }
  return t;
}

SymmetricResult best_symmetric(const FaultModel& model) {
  const ScenarioList scenarios = enumerate_viable(model, /*drop_zero=*/true);
  SymmetricResult result{1, -1.0};
  for (int k = 1; k <= model.size(); ++k) {
    const double success = success_probability(threshold_table(model.size(), k), scenarios);
    if (success > result.success_probability) {
      result = {k, success};
    }
  }
  return result;
}

namespace {

void split_rows(const PartialTruthTable& t, std::vector<std::uint32_t>& trues,
                std::vector<std::uint32_t>& falses) {
  for (std::uint32_t v = 0; v < t.row_count(); ++v) {
    if (t.row(v) == Trit::True) trues.push_back(v);
    if (t.row(v) == Trit::False) falses.push_back(v);
  }
}

}  // namespace

Dominance dominance_relation(const PartialTruthTable& t1, const PartialTruthTable& t2) {
  if (t1.n() != t2.n()) {
    throw std::invalid_argument("dominance needs tables over the same credentials");
  }
  if (t1.n() > 8) {
    throw GuardError("dominance comparison is limited to 8 credentials");
  }
  if (!t1.complete() || !t2.complete()) {
    throw std::logic_error("dominance needs complete tables");
  }
  std::vector<std::uint32_t> trues1, falses1, trues2, falses2;
  split_rows(t1, trues1, falses1);
  split_rows(t2, trues2, falses2);

  const bool empty1 = trues1.empty() || falses1.empty();
  const bool empty2 = trues2.empty() || falses2.empty();
  // Prof(a) is a subset of Prof(b) iff Prof(a) is empty or T_a and F_a are
  // both contained in their counterparts (profiles are Cartesian products).
  const bool one_in_two =
      empty1 || (!empty2 && std::includes(trues2.begin(), trues2.end(), trues1.begin(),
                                          trues1.end()) &&
                 std::includes(falses2.begin(), falses2.end(), falses1.begin(), falses1.end()));
  const bool two_in_one =
      empty2 || (!empty1 && std::includes(trues1.begin(), trues1.end(), trues2.begin(),
                                          trues2.end()) &&
                 std::includes(falses1.begin(), falses1.end(), falses2.begin(), falses2.end()));
  if (one_in_two && two_in_one) return Dominance::Equivalent;
  if (two_in_one) return Dominance::FirstStrict;
  if (one_in_two) return Dominance::SecondStrict;
  return Dominance::Incomparable;
}

const char* to_string(Dominance d) {
  switch (d) {
    case Dominance::Equivalent:
      return "equivalent";
    case Dominance::FirstStrict:
      return "first_strict";
    case Dominance::SecondStrict:
      return "second_strict";
    case Dominance::Incomparable:
      return "incomparable";
  }
  return "?";
}

}  // namespace auth
