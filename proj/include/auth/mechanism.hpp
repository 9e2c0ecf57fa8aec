#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "auth/credmodel.hpp"

namespace auth {

enum class Trit : std::uint8_t { False = 0, True = 1, Unset = 2 };

/// Dense 2^n-row table of trits indexed by availability-vector value.
///
/// Tables built through fresh() / close_* / complete_arbitrarily keep two
/// closure invariants: the True rows form an upward-closed set and the False
/// rows a downward-closed set, so the table always extends to a monotone
/// Boolean function. force_row bypasses that and is meant for parsers and
/// for tests that need a broken table.
class PartialTruthTable {
 public:
  /// All rows Unset. Throws GuardError unless 1 <= n <= kMaxCredentials.
  explicit PartialTruthTable(int n);

  /// The search's starting point: all rows Unset except the all-zeroes row
  /// (False) and the all-ones row (True), which excludes the constant
  /// functions up front.
  static PartialTruthTable fresh(int n);

  int n() const { return n_; }
  std::uint32_t row_count() const { return static_cast<std::uint32_t>(rows_.size()); }
  Trit row(std::uint32_t value) const { return rows_[value]; }
  Trit row(AvailabilityVector v) const { return rows_[v.bits]; }
  int true_count() const { return true_count_; }
  int false_count() const { return false_count_; }
  bool complete() const {
    return true_count_ + false_count_ == static_cast<int>(rows_.size());
  }

  /// Sets v and every row above it to True. Throws std::logic_error if any
  /// affected row is already False.
  void close_true_upward(AvailabilityVector v);

  /// Sets v and every row below it to False. Throws std::logic_error if any
  /// affected row is already True.
  void close_false_downward(AvailabilityVector v);

  /// Unchecked write; maintains counts but not closure.
  void force_row(std::uint32_t value, Trit t);

  friend bool operator==(const PartialTruthTable&, const PartialTruthTable&) = default;

 private:
  int n_ = 0;
  int true_count_ = 0;
  int false_count_ = 0;
  std::vector<Trit> rows_;
};

/// Full pairwise scan: no pair x >= y with rows[y]=True and rows[x]=False.
bool is_monotone(const PartialTruthTable& t);

/// A scenario can be added to the table: the user's row is not forced False,
/// the attacker's row is not forced True, and at least one of the two is
/// still Unset (otherwise the scenario is already in the profile).
bool is_compatible(const PartialTruthTable& t, const Scenario& s);

/// Returns a copy of t with rows[user]=True closed upward and
/// rows[attacker]=False closed downward; t itself is unchanged.
/// Throws std::logic_error unless is_compatible(t, s).
PartialTruthTable update_with_scenario(const PartialTruthTable& t, const Scenario& s);

/// Sum of the probabilities of listed scenarios with rows[user]=True and
/// rows[attacker]=False. Valid for partial and complete tables; zero-
/// probability scenarios omitted from the list contribute nothing.
double success_probability(const PartialTruthTable& t, const ScenarioList& scenarios);

/// Upper bound on how many scenarios any monotone completion of t can add
/// to t's profile. With s = max(|T|,|F|) and p = |T|*|F|:
///   s >= 2^(n-1), s = |T|:  |T|*(2^n-|T|) - p
///   s >= 2^(n-1), s = |F|:  |F|*(2^n-|F|) - p
///   otherwise:              (4^n - 3^n) - p
std::uint64_t max_profile_additions(const PartialTruthTable& t);

/// Applies every compatible remaining scenario from from_index onward in
/// list order, then sets all still-Unset rows to False. The fill is monotone-
/// safe because the True set is upward closed.
PartialTruthTable complete_arbitrarily(PartialTruthTable t, const ScenarioList& remaining,
                                       std::size_t from_index);

/// Minimal elements of the True set, ascending by value. Requires a complete
/// monotone table; throws std::logic_error if t is incomplete.
std::vector<AvailabilityVector> minimal_true_vectors(const PartialTruthTable& t);

/// Upward closure of an antichain: rows[x]=True iff x covers some member.
PartialTruthTable table_from_minimal_true_vectors(int n,
                                                  const std::vector<AvailabilityVector>& vectors);

/// The table's profile as explicit scenarios, |T|*|F| of them, ascending by
/// (user, attacker). Test-support operation; throws GuardError for n > 8.
std::vector<Scenario> profile_of(const PartialTruthTable& t);

struct MechanismSummary {
  std::vector<AvailabilityVector> minimal_true_vectors;
  double success_probability = 0.0;
  double failure_probability = 1.0;
};

MechanismSummary summarize(const PartialTruthTable& t, const ScenarioList& scenarios);

// Bitstring rendering puts credential 1 leftmost: character i of the string
// is bit i of the vector.
std::string to_bitstring(AvailabilityVector v, int n);
AvailabilityVector bitstring_to_vector(const std::string& s);  // throws ParseError

// Mechanism text format: header "n=<count>", then one minimal true vector
// per line as an n-character bitstring, ascending by integer value.
std::string format_mechanism(const PartialTruthTable& t);
PartialTruthTable parse_mechanism(std::istream& in);
PartialTruthTable load_mechanism(const std::string& path);

}  // namespace auth
