#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "auth/errors.hpp"

namespace auth {

// Dense 2^n truth tables and 4^n scenario spaces stop being desk scale
// beyond this; enforced at FaultModel construction.
inline constexpr int kMaxCredentials = 14;

// A credential row must sum to 1 within this tolerance before it is
// renormalized by exact division.
inline constexpr double kRowSumTolerance = 1e-12;

/// State of one credential in a scenario: who ends up holding the secret.
enum class CredState : std::uint8_t {
  Safe,   // user only
  Loss,   // neither player
  Leak,   // both players
  Theft,  // attacker only
};

const char* to_string(CredState s);

/// Total mapping from (user holds, attacker holds) bits to the state.
CredState state_of(bool user_bit, bool attacker_bit);

/// Fault distribution of a single credential over the four states.
struct CredentialSpec {
  double p_safe = 1.0;
  double p_loss = 0.0;
  double p_leak = 0.0;
  double p_theft = 0.0;

  /// Validates that every entry lies in [0,1] and the row sums to 1 within
  /// kRowSumTolerance, then renormalizes by dividing by the exact sum so
  /// decimal round-off in the input does not skew downstream products.
  /// Throws ParseError otherwise.
  static CredentialSpec make(double safe, double loss, double leak, double theft);

  double prob(CredState s) const;
};

/// Ordered credential fault distributions; the n-credential probability space.
class FaultModel {
 public:
  /// Throws GuardError unless 1 <= creds.size() <= kMaxCredentials.
  explicit FaultModel(std::vector<CredentialSpec> creds);

  int size() const { return static_cast<int>(creds_.size()); }
  const CredentialSpec& cred(int i) const { return creds_.at(static_cast<std::size_t>(i)); }
  const std::vector<CredentialSpec>& creds() const { return creds_; }

 private:
  std::vector<CredentialSpec> creds_;
};

/// n-bit availability vector; bit i is the availability of credential i.
struct AvailabilityVector {
  std::uint32_t bits = 0;

  /// Componentwise partial order: *this >= other.
  bool covers(AvailabilityVector other) const { return (other.bits & ~bits) == 0; }

  friend bool operator==(AvailabilityVector, AvailabilityVector) = default;
};

/// A pair of availability vectors: what the user holds and what the attacker holds.
struct Scenario {
  AvailabilityVector user;
  AvailabilityVector attacker;

  /// Deterministic tie-break key: user * 2^n + attacker.
  std::uint64_t encoding(int n) const {
    return (static_cast<std::uint64_t>(user.bits) << n) | attacker.bits;
  }

  friend bool operator==(Scenario, Scenario) = default;
};

/// True iff some credential is safe, i.e. NOT (user <= attacker).
bool is_viable(const Scenario& s);

/// Product over credentials of the probability of the state each is in.
/// Throws std::invalid_argument if a vector has bits beyond model.size().
double scenario_probability(const FaultModel& model, const Scenario& s);

struct WeightedScenario {
  Scenario scenario;
  double probability = 0.0;
};

/// Viable scenarios sorted by probability descending; equal probabilities
/// are ordered by ascending Scenario::encoding so results are reproducible.
struct ScenarioList {
  int n = 0;
  std::vector<WeightedScenario> entries;

  std::size_t size() const { return entries.size(); }
};

/// All 4^n - 3^n viable scenarios, or only those with positive probability
/// when drop_zero is set, sorted per the ScenarioList contract.
ScenarioList enumerate_viable(const FaultModel& model, bool drop_zero = true);

/// Sum of the first min(k, size) probabilities.
double cumulative_top_k(const ScenarioList& list, std::size_t k);

/// Number of viable scenarios, 4^n - 3^n, without enumerating them.
std::uint64_t viable_scenario_count(int n);

// Fault-model CSV: header line "safe,loss,leak,theft", then one row of four
// decimal literals per credential, in credential index order. Rows failing
// the sum-to-1 check beyond kRowSumTolerance are rejected.
FaultModel parse_fault_model_csv(std::istream& in);
FaultModel load_fault_model(const std::string& path);
void write_fault_model_csv(std::ostream& out, const FaultModel& model);

}  // namespace auth
