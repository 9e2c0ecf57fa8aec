#include "auth/credmodel.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace auth {

const char* to_string(CredState s) {
  switch (s) {
    case CredState::Safe:
      return "safe";
    case CredState::Loss:
      return "loss";
    case CredState::Leak:
      return "leak";
    case CredState::Theft:
      return "theft";
  }
  return "?";
}

CredState state_of(bool user_bit, bool attacker_bit) {
  if (user_bit) {
    return attacker_bit ? CredState::Leak : CredState::Safe;
  }
  return attacker_bit ? CredState::Theft : CredState::Loss;
}

CredentialSpec CredentialSpec::make(double safe, double loss, double leak, double theft) {
  const double probs[4] = {safe, loss, leak, theft};
  for (double p : probs) {
    if (!std::isfinite(p) || p < 0.0 || p > 1.0) {
      throw ParseError("credential probability out of [0,1]");
    }
  }
  const double sum = safe + loss + leak + theft;
  if (std::abs(sum - 1.0) > kRowSumTolerance) {
    std::ostringstream msg;
    msg << "credential probabilities sum to " << sum << ", not 1";
    throw ParseError(msg.str());
  }
  return CredentialSpec{safe / sum, loss / sum, leak / sum, theft / sum};
}

double CredentialSpec::prob(CredState s) const {
  switch (s) {
    case CredState::Safe:
      return p_safe;
    case CredState::Loss:
      return p_loss;
    case CredState::Leak:
      return p_leak;
    case CredState::Theft:
      return p_theft;
  }
  return 0.0;
}

FaultModel::FaultModel(std::vector<CredentialSpec> creds) : creds_(std::move(creds)) {
  if (creds_.empty()) {
    throw GuardError("fault model needs at least one credential");
  }
  if (creds_.size() > static_cast<std::size_t>(kMaxCredentials)) {
    throw GuardError("fault model exceeds the credential ceiling");
  }
}

bool is_viable(const Scenario& s) { return (s.user.bits & ~s.attacker.bits) != 0; }

double scenario_probability(const FaultModel& model, const Scenario& s) {
  const int n = model.size();
  const std::uint32_t limit = std::uint32_t{1} << n;
  if (s.user.bits >= limit || s.attacker.bits >= limit) {
    throw std::invalid_argument("scenario does not match the model's credential count");
  }
  double p = 1.0;
  for (int i = 0; i < n; ++i) {
    const bool u = (s.user.bits >> i) & 1u;
    const bool a = (s.attacker.bits >> i) & 1u;
    p *= model.cred(i).prob(state_of(u, a));
  }
  return p;
}

std::uint64_t viable_scenario_count(int n) {
  std::uint64_t pow4 = 1, pow3 = 1;
  for (int i = 0; i < n; ++i) {
    pow4 *= 4;
    pow3 *= 3;
  }
  return pow4 - pow3;
}

namespace {

void sort_scenario_list(ScenarioList& list) {
  const int n = list.n;
  std::sort(list.entries.begin(), list.entries.end(),
            [n](const WeightedScenario& a, const WeightedScenario& b) {
              if (a.probability != b.probability) return a.probability > b.probability;
              return a.scenario.encoding(n) < b.scenario.encoding(n);
            });
}

// Availability bits of (user, attacker) for each credential state.
constexpr std::pair<unsigned, unsigned> kStateBits[4] = {
    {1u, 0u},  // safe
    {0u, 0u},  // loss
    {1u, 1u},  // leak
    {0u, 1u},  // theft
};

// Product walk over the states each credential can actually be in, so a
// model with zeroed fault types never touches the scenarios they rule out.
void emit_positive(const FaultModel& model, int cred, Scenario s, double p,
                   std::vector<WeightedScenario>& out) {
  if (cred == model.size()) {
    if (is_viable(s)) out.push_back({s, p});
    return;
  }
  const CredentialSpec& spec = model.cred(cred);
  for (int state = 0; state < 4; ++state) {
    const double ps = spec.prob(static_cast<CredState>(state));
    if (ps <= 0.0) continue;
    Scenario next = s;
    next.user.bits |= kStateBits[state].first << cred;
    next.attacker.bits |= kStateBits[state].second << cred;
    emit_positive(model, cred + 1, next, p * ps, out);
  }
}

}  // namespace

ScenarioList enumerate_viable(const FaultModel& model, bool drop_zero) {
  const int n = model.size();
  ScenarioList list;
  list.n = n;
  if (drop_zero) {
    emit_positive(model, 0, Scenario{}, 1.0, list.entries);
  } else {
    const std::uint64_t limit = std::uint64_t{1} << n;
    list.entries.reserve(viable_scenario_count(n));
    for (std::uint64_t u = 0; u < limit; ++u) {
      for (std::uint64_t a = 0; a < limit; ++a) {
        Scenario s{{static_cast<std::uint32_t>(u)}, {static_cast<std::uint32_t>(a)}};
        if (!is_viable(s)) continue;
        list.entries.push_back({s, scenario_probability(model, s)});
      }
    }
  }
  sort_scenario_list(list);
  return list;
}

double cumulative_top_k(const ScenarioList& list, std::size_t k) {
  const std::size_t count = std::min(k, list.entries.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    sum += list.entries[i].probability;
  }
  return sum;
}

namespace {

std::string trim(const std::string& s) {
  std::size_t begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  std::size_t end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

double parse_probability_field(const std::string& field, int line_no) {
  const std::string text = trim(field);
  std::ostringstream msg;
  try {
    std::size_t used = 0;
    const double value = std::stod(text, &used);
    if (used != text.size()) throw ParseError("");
    return value;
  } catch (const std::exception&) {
    msg << "line " << line_no << ": '" << field << "' is not a probability";
    throw ParseError(msg.str());
  }
}

}  // namespace

FaultModel parse_fault_model_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) {
    throw ParseError("empty fault-model file");
  }
  if (trim(line) != "safe,loss,leak,theft") {
    throw ParseError("fault-model header must be 'safe,loss,leak,theft'");
  }
  std::vector<CredentialSpec> creds;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    std::istringstream row(line);
    std::string field;
    double values[4];
    for (int i = 0; i < 4; ++i) {
      if (!std::getline(row, field, ',')) {
        std::ostringstream msg;
        msg << "line " << line_no << ": expected 4 comma-separated probabilities";
        throw ParseError(msg.str());
      }
      values[i] = parse_probability_field(field, line_no);
    }
    if (std::getline(row, field, ',')) {
      std::ostringstream msg;
      msg << "line " << line_no << ": too many fields";
      throw ParseError(msg.str());
    }
    creds.push_back(CredentialSpec::make(values[0], values[1], values[2], values[3]));
  }
  if (creds.empty()) {
    throw ParseError("fault-model file has no credential rows");
  }
  if (creds.size() > static_cast<std::size_t>(kMaxCredentials)) {
    throw ParseError("fault-model file exceeds the credential ceiling");
  }
  return FaultModel(std::move(creds));
}

FaultModel load_fault_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open fault-model file: " + path);
  }
  return parse_fault_model_csv(in);
}

void write_fault_model_csv(std::ostream& out, const FaultModel& model) {
  out << "safe,loss,leak,theft\n";
  out.precision(17);
  for (int i = 0; i < model.size(); ++i) {
    const CredentialSpec& c = model.cred(i);
    out << c.p_safe << ',' << c.p_loss << ',' << c.p_leak << ',' << c.p_theft << '\n';
  }
}

}  // namespace auth
