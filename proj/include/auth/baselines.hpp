#pragma once

#include <cstdint>
#include <vector>

#include "auth/mechanism.hpp"

namespace auth {

/// Every monotone Boolean function on n variables, deduplicated and in
/// lexicographic order of the 2^n-bit row string. Stored packed: bit v of
/// function_bits(i) is f_i(v).
class MonotoneCatalog {
 public:
  MonotoneCatalog(int n, std::vector<std::uint64_t> functions);

  int n() const { return n_; }
  std::size_t size() const { return functions_.size(); }
  std::uint64_t function_bits(std::size_t i) const { return functions_[i]; }
  bool eval(std::size_t i, std::uint32_t value) const {
    return (functions_[i] >> value) & 1u;
  }
  PartialTruthTable table(std::size_t i) const;

 private:
  int n_;
  std::vector<std::uint64_t> functions_;
};

/// DFS over rows in ascending popcount order with closure propagation.
/// Counts match the Dedekind numbers: 3, 6, 20, 168, 7581 for n = 1..5.
/// n = 6 (7828354 functions) only with allow_large; throws GuardError above.
MonotoneCatalog enumerate_monotone(int n, bool allow_large = false);

struct ExhaustiveResult {
  PartialTruthTable best_table;
  double success_probability = 0.0;
};

/// Ground-truth optimum by evaluating the whole catalog; ties keep the
/// earlier catalog entry. Requires model.size() <= 5, or 6 with allow_large.
ExhaustiveResult exhaustive_search(const FaultModel& model, bool allow_large = false);

/// k-of-n threshold function: true iff at least k bits set.
PartialTruthTable threshold_table(int n, int k);

struct SymmetricResult {
  int k = 1;
  double success_probability = 0.0;
};

/// Best k-of-n threshold mechanism; smallest k on ties.
SymmetricResult best_symmetric(const FaultModel& model);

enum class Dominance {
  Equivalent,    // same profile
  FirstStrict,   // profile of t2 is a strict subset of t1's
  SecondStrict,  // profile of t1 is a strict subset of t2's
  Incomparable,
};

/// Set comparison of the two profiles. Requires equal n <= 8 and complete tables.
Dominance dominance_relation(const PartialTruthTable& t1, const PartialTruthTable& t2);

const char* to_string(Dominance d);

}  // namespace auth
