#include "auth/execsim.hpp"

#include <algorithm>
#include <sstream>

namespace auth {

namespace {

// splitmix64; deterministic token material from the scheduler seed.
std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace

IdealCredentialSet IdealCredentialSet::generate(int n, std::uint64_t seed) {
  IdealCredentialSet set;
  set.secrets_.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    set.secrets_.push_back(mix(seed + static_cast<std::uint64_t>(i) + 1));
  }
  return set;
}

bool IdealCredentialSet::verifies(int i, std::uint64_t claimed_secret) const {
  return i >= 0 && i < n() && secrets_[static_cast<std::size_t>(i)] == claimed_secret;
}

const char* to_string(Winner w) {
  switch (w) {
    case Winner::User:
      return "user";
    case Winner::Attacker:
      return "attacker";
    case Winner::Undecided:
      return "undecided";
  }
  return "?";
}

namespace {

struct Message {
  int deliver_step = 0;
  int sender_id = 0;
  const char* sender_name = "";
  bool garbage = false;
  AvailabilityVector mask;
  std::vector<std::pair<int, std::uint64_t>> proofs;  // (credential index, claimed secret)
};

void plan_message(const StrategySpec& strategy, const char* name, int id, int delay,
                  AvailabilityVector availability, const IdealCredentialSet& creds, int n,
                  std::vector<Message>& out, ExecutionTrace& trace) {
  if (strategy.kind == StrategyKind::Silent) return;
  Message msg;
  msg.sender_id = id;
  msg.sender_name = name;
  msg.deliver_step = strategy.step + delay;
  if (strategy.kind == StrategyKind::Garbage) {
    msg.garbage = true;
    trace.events.push_back({strategy.step, name, "send", "garbage"});
  } else {
    if (!availability.covers(strategy.mask)) {
      throw std::invalid_argument("strategy uses credentials outside the player's availability");
    }
    msg.mask = strategy.mask;
    for (int i = 0; i < n; ++i) {
      if ((strategy.mask.bits >> i) & 1u) msg.proofs.emplace_back(i, creds.secret(i));
    }
    trace.events.push_back({strategy.step, name, "send", "creds:" + to_bitstring(strategy.mask, n)});
  }
  out.push_back(std::move(msg));
}

}  // namespace

ExecutionTrace run_execution(const PartialTruthTable& f, const Scenario& s,
                             const StrategySpec& user, const StrategySpec& attacker,
                             const SchedulerSpec& sched, int horizon) {
  if (!f.complete()) {
    throw std::invalid_argument("the mechanism automaton needs a complete table");
  }
  const int n = f.n();
  if (s.user.bits >= f.row_count() || s.attacker.bits >= f.row_count()) {
    throw std::invalid_argument("scenario does not match the mechanism's credential count");
  }
  if (horizon < 1) {
    throw std::invalid_argument("horizon must be at least 1");
  }
  if (sched.id_assignment != 0 && sched.id_assignment != 1) {
    throw std::invalid_argument("identifier assignment must be 0 or 1");
  }
  if (sched.user_delay < 1 || sched.attacker_delay < 1) {
    throw std::invalid_argument("delivery delays must be at least one step");
  }

  const IdealCredentialSet creds = IdealCredentialSet::generate(n, sched.seed);
  const int user_id = sched.id_assignment;
  const int attacker_id = 1 - user_id;

  ExecutionTrace trace;
  std::vector<Message> pending;
  plan_message(user, "user", user_id, sched.user_delay, s.user, creds, n, pending, trace);
  plan_message(attacker, "attacker", attacker_id, sched.attacker_delay, s.attacker, creds, n,
               pending, trace);

  // Same-step deliveries are processed in identifier order.
  std::sort(pending.begin(), pending.end(), [](const Message& a, const Message& b) {
    if (a.deliver_step != b.deliver_step) return a.deliver_step < b.deliver_step;
    return a.sender_id < b.sender_id;
  });
  std::stable_sort(trace.events.begin(), trace.events.end(),
                   [](const TraceEvent& a, const TraceEvent& b) { return a.step < b.step; });

  // One-shot mechanism: the first delivered message decides everything.
  for (const Message& msg : pending) {
    if (msg.deliver_step > horizon) continue;
    bool valid = !msg.garbage;
    for (const auto& [index, secret] : msg.proofs) {
      if (!creds.verifies(index, secret)) valid = false;
    }
    trace.events.push_back({msg.deliver_step, "mechanism", "deliver",
                            std::string("from=") + msg.sender_name + " " +
                                (valid ? "creds:" + to_bitstring(msg.mask, n) : "invalid")});
    int decided;
    if (!valid) {
      decided = 1 - msg.sender_id;
    } else if (f.row(msg.mask) == Trit::True) {
      decided = msg.sender_id;
    } else {
      decided = 1 - msg.sender_id;
    }
    trace.winner = decided == user_id ? Winner::User : Winner::Attacker;
    trace.events.push_back({msg.deliver_step, "mechanism", "decide",
                            "id=" + std::to_string(decided) + " (" + to_string(trace.winner) +
                                ")"});
    return trace;
  }
  return trace;  // nothing delivered within the horizon: undecided
}

bool check_success(const PartialTruthTable& f, const Scenario& s, int horizon) {
  if (horizon < 2) {
    throw std::invalid_argument("success checks need a horizon of at least 2");
  }
  if (f.n() > 4) {
    throw GuardError("success checks are limited to 4 credentials");
  }
  // The canonical winning candidate: present everything at the first step.
  const StrategySpec user = StrategySpec::send_subset(s.user, 0);

  std::vector<StrategySpec> attacker_strategies;
  attacker_strategies.push_back(StrategySpec::silent());
  for (int step = 0; step <= horizon; ++step) {
    attacker_strategies.push_back(StrategySpec::garbage(step));
    std::uint32_t sub = s.attacker.bits;
    while (true) {
      attacker_strategies.push_back(StrategySpec::send_subset({sub}, step));
      if (sub == 0) break;
      sub = (sub - 1) & s.attacker.bits;
    }
  }

  for (int id = 0; id <= 1; ++id) {
    for (int user_delay = 1; user_delay <= horizon; ++user_delay) {
      for (int attacker_delay = 1; attacker_delay <= horizon; ++attacker_delay) {
        for (const StrategySpec& attacker : attacker_strategies) {
          const SchedulerSpec sched{id, user_delay, attacker_delay, 0};
          const ExecutionTrace trace = run_execution(f, s, user, attacker, sched, horizon);
          if (trace.winner == Winner::Attacker) return false;
        }
      }
    }
  }
  return true;
}

std::string format_trace(const ExecutionTrace& trace) {
  std::ostringstream out;
  for (const TraceEvent& event : trace.events) {
    out << event.step << '|' << event.actor << '|' << event.event << '|' << event.payload << '\n';
  }
  return out.str();
}

}  // namespace auth
