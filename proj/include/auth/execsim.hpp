#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "auth/mechanism.hpp"

namespace auth {

/// Ideal credential tokens: a proof of availability verifies iff the sender
/// holds the secret part, and forgery is impossible by construction. Secrets
/// are derived deterministically from the seed.
class IdealCredentialSet {
 public:
  static IdealCredentialSet generate(int n, std::uint64_t seed);

  int n() const { return static_cast<int>(secrets_.size()); }
  std::uint64_t secret(int i) const { return secrets_.at(static_cast<std::size_t>(i)); }
  bool verifies(int i, std::uint64_t claimed_secret) const;

 private:
  std::vector<std::uint64_t> secrets_;
};

enum class StrategyKind : std::uint8_t { SendSubset, Silent, Garbage };

/// One-shot player behavior: send a subset of held credentials at a fixed
/// step, stay silent, or send a message that is not a valid credential set.
struct StrategySpec {
  StrategyKind kind = StrategyKind::Silent;
  AvailabilityVector mask;  // SendSubset only; must be within the player's availability
  int step = 0;             // SendSubset / Garbage

  static StrategySpec send_subset(AvailabilityVector mask, int step) {
    return {StrategyKind::SendSubset, mask, step};
  }
  static StrategySpec silent() { return {StrategyKind::Silent, {}, 0}; }
  static StrategySpec garbage(int step) { return {StrategyKind::Garbage, {}, step}; }
};

/// Reliable but asynchronous delivery: each message arrives a fixed number
/// of steps after it is sent. id_assignment picks which identifier the user
/// gets; messages delivered in the same step are processed in identifier
/// order.
struct SchedulerSpec {
  int id_assignment = 0;  // identifier handed to the user (0 or 1)
  int user_delay = 1;
  int attacker_delay = 1;
  std::uint64_t seed = 0;
};

enum class Winner : std::uint8_t { User, Attacker, Undecided };

const char* to_string(Winner w);

struct TraceEvent {
  int step = 0;
  std::string actor;
  std::string event;
  std::string payload;
};

struct ExecutionTrace {
  std::vector<TraceEvent> events;
  Winner winner = Winner::Undecided;
};

/// Simulates one bounded execution of the Boolean mechanism automaton for a
/// complete table f. The mechanism decides on the first delivered message:
/// a valid credential set c makes it decide the sender iff f(avail(c)) = 1
/// and the other player otherwise; an invalid message makes it decide the
/// other player; no delivery within the horizon leaves it undecided.
/// Throws std::invalid_argument if a strategy uses credentials outside the
/// scenario's availability.
ExecutionTrace run_execution(const PartialTruthTable& f, const Scenario& s,
                             const StrategySpec& user, const StrategySpec& attacker,
                             const SchedulerSpec& sched, int horizon);

/// Fixes the canonical user strategy (send all available credentials at
/// step 0) and enumerates every attacker strategy class (each subset of the
/// attacker's credentials at each step, silence, garbage at each step)
/// against every scheduler (both id assignments, all delay pairs within the
/// horizon). True iff the user wins every run in which a message is
/// delivered. Requires horizon >= 2 and n <= 4.
bool check_success(const PartialTruthTable& f, const Scenario& s, int horizon);

/// One line per event: "step|actor|event|payload".
std::string format_trace(const ExecutionTrace& trace);

}  // namespace auth
