#include <doctest.h>

#include "auth/baselines.hpp"
#include "auth/execsim.hpp"
#include "test_support.hpp"

using namespace auth;
using testsupport::scenario;

namespace {

PartialTruthTable and2() { return table_from_minimal_true_vectors(2, {{0b11}}); }
PartialTruthTable or2() { return table_from_minimal_true_vectors(2, {{0b01}, {0b10}}); }

}  // namespace

TEST_CASE("the user wins with a valid full credential set and a silent attacker") {
  const SchedulerSpec sched{0, 1, 1, 42};
  const ExecutionTrace trace = run_execution(and2(), scenario(0b11, 0b00),
                                             StrategySpec::send_subset({0b11}, 0),
                                             StrategySpec::silent(), sched, 4);
  CHECK(trace.winner == Winner::User);
}

TEST_CASE("a replayed credential set decides for the attacker when f accepts it") {
  // Both credentials leaked; the attacker's message lands first.
  const SchedulerSpec sched{0, 3, 1, 42};
  const ExecutionTrace trace = run_execution(and2(), scenario(0b11, 0b11),
                                             StrategySpec::send_subset({0b11}, 0),
                                             StrategySpec::send_subset({0b11}, 0), sched, 4);
  CHECK(trace.winner == Winner::Attacker);
}

TEST_CASE("garbage delivered first decides for the other player") {
  const SchedulerSpec sched{0, 3, 1, 42};
  const ExecutionTrace trace = run_execution(and2(), scenario(0b11, 0b00),
                                             StrategySpec::send_subset({0b11}, 0),
                                             StrategySpec::garbage(0), sched, 4);
  CHECK(trace.winner == Winner::User);
}

TEST_CASE("an insufficient credential set delivered first loses for its sender") {
  const SchedulerSpec sched{1, 1, 2, 7};
  const ExecutionTrace trace = run_execution(and2(), scenario(0b01, 0b00),
                                             StrategySpec::send_subset({0b01}, 0),
                                             StrategySpec::silent(), sched, 4);
  // f(01 credentials) = 0, so the mechanism decides the other player.
  CHECK(trace.winner == Winner::Attacker);
}

TEST_CASE("nothing delivered within the horizon stays undecided") {
  const SchedulerSpec sched{0, 1, 1, 0};
  const ExecutionTrace silent_both = run_execution(and2(), scenario(0b11, 0b00),
                                                   StrategySpec::silent(), StrategySpec::silent(),
                                                   sched, 4);
  CHECK(silent_both.winner == Winner::Undecided);
  CHECK(silent_both.events.empty());

  const SchedulerSpec late{0, 4, 1, 0};
  const ExecutionTrace too_late = run_execution(and2(), scenario(0b11, 0b00),
                                                StrategySpec::send_subset({0b11}, 2),
                                                StrategySpec::silent(), late, 4);
  CHECK(too_late.winner == Winner::Undecided);  // delivery would land at step 6

  // Delivery exactly at the horizon still counts.
  const ExecutionTrace at_edge = run_execution(and2(), scenario(0b11, 0b00),
                                               StrategySpec::send_subset({0b11}, 0),
                                               StrategySpec::silent(), late, 4);
  CHECK(at_edge.winner == Winner::User);
}

TEST_CASE("strategies must respect the scenario's availability") {
  const SchedulerSpec sched{0, 1, 1, 0};
  CHECK_THROWS_AS(run_execution(and2(), scenario(0b01, 0b00),
                                StrategySpec::send_subset({0b11}, 0), StrategySpec::silent(),
                                sched, 4),
                  std::invalid_argument);
  CHECK_THROWS_AS(run_execution(and2(), scenario(0b11, 0b00), StrategySpec::silent(),
                                StrategySpec::send_subset({0b01}, 0), sched, 4),
                  std::invalid_argument);
}

TEST_CASE("one-shot semantics: only the first delivery matters") {
  // Attacker's garbage lands at step 1, user's valid set at step 2; with AND
  // and a clean scenario the garbage already decides for the user.
  const SchedulerSpec sched{0, 2, 1, 5};
  const ExecutionTrace trace = run_execution(and2(), scenario(0b11, 0b00),
                                             StrategySpec::send_subset({0b11}, 0),
                                             StrategySpec::garbage(0), sched, 4);
  CHECK(trace.winner == Winner::User);
  int decides = 0;
  for (const TraceEvent& e : trace.events) {
    if (e.event == "decide") ++decides;
  }
  CHECK(decides == 1);
}

TEST_CASE("traces replay identically and match the frozen golden form") {
  const SchedulerSpec sched{0, 2, 1, 42};
  const auto run = [&] {
    return run_execution(and2(), scenario(0b11, 0b01), StrategySpec::send_subset({0b11}, 0),
                         StrategySpec::send_subset({0b01}, 1), sched, 4);
  };
  const ExecutionTrace a = run();
  const ExecutionTrace b = run();
  CHECK(format_trace(a) == format_trace(b));
  CHECK(format_trace(a) ==
        "0|user|send|creds:11\n"
        "1|attacker|send|creds:10\n"
        "2|mechanism|deliver|from=user creds:11\n"
        "2|mechanism|decide|id=0 (user)\n");
}

TEST_CASE("check_success on the worked scenarios") {
  CHECK(check_success(and2(), scenario(0b11, 0b00), 3));
  CHECK_FALSE(check_success(and2(), scenario(0b11, 0b11), 3));
  CHECK(check_success(or2(), scenario(0b01, 0b00), 3));

  CHECK_THROWS_AS(check_success(and2(), scenario(0b11, 0b00), 1), std::invalid_argument);
  std::vector<AvailabilityVector> none;
  CHECK_THROWS_AS(check_success(table_from_minimal_true_vectors(5, none),
                                scenario(0, 0), 3),
                  GuardError);
}

TEST_CASE("success matches f(user)=1 and f(attacker)=0 for every small mechanism") {
  for (int n = 1; n <= 2; ++n) {
    const MonotoneCatalog catalog = enumerate_monotone(n);
    const std::uint32_t vectors = std::uint32_t{1} << n;
    for (std::size_t i = 0; i < catalog.size(); ++i) {
      const PartialTruthTable f = catalog.table(i);
      for (std::uint32_t u = 0; u < vectors; ++u) {
        for (std::uint32_t a = 0; a < vectors; ++a) {
          const bool expected = f.row(u) == Trit::True && f.row(a) == Trit::False;
          REQUIRE(check_success(f, scenario(u, a), 3) == expected);
        }
      }
    }
  }
}

TEST_CASE("successful scenarios win under every scheduler, attacker-first included") {
  const PartialTruthTable f = and2();
  const Scenario s = scenario(0b11, 0b10);
  REQUIRE(f.row(s.user) == Trit::True);
  REQUIRE(f.row(s.attacker) == Trit::False);
  for (int id = 0; id <= 1; ++id) {
    for (int user_delay = 1; user_delay <= 3; ++user_delay) {
      for (int attacker_delay = 1; attacker_delay <= 3; ++attacker_delay) {
        const SchedulerSpec sched{id, user_delay, attacker_delay, 11};
        const ExecutionTrace trace = run_execution(f, s, StrategySpec::send_subset(s.user, 0),
                                                   StrategySpec::send_subset(s.attacker, 0),
                                                   sched, 4);
        REQUIRE(trace.winner == Winner::User);
      }
    }
  }
}

TEST_CASE("ideal credentials verify only the real secret") {
  const IdealCredentialSet creds = IdealCredentialSet::generate(3, 99);
  CHECK(creds.verifies(0, creds.secret(0)));
  CHECK(creds.verifies(2, creds.secret(2)));
  CHECK_FALSE(creds.verifies(0, creds.secret(0) ^ 1));
  CHECK_FALSE(creds.verifies(3, 0));
  // Same seed, same tokens.
  const IdealCredentialSet again = IdealCredentialSet::generate(3, 99);
  CHECK(again.secret(1) == creds.secret(1));
}
