#include "auth/mechanism.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace auth {

PartialTruthTable::PartialTruthTable(int n) : n_(n) {
  if (n < 1 || n > kMaxCredentials) {
    throw GuardError("credential count out of range for a truth table");
  }
  rows_.assign(std::size_t{1} << n, Trit::Unset);
}

PartialTruthTable PartialTruthTable::fresh(int n) {
  PartialTruthTable t(n);
  t.force_row(0, Trit::False);
  t.force_row(t.row_count() - 1, Trit::True);
  return t;
}

void PartialTruthTable::force_row(std::uint32_t value, Trit t) {
  Trit& slot = rows_.at(value);
  if (slot == t) return;
  if (slot == Trit::True) --true_count_;
  if (slot == Trit::False) --false_count_;
  slot = t;
  if (t == Trit::True) ++true_count_;
  if (t == Trit::False) ++false_count_;
}

void PartialTruthTable::close_true_upward(AvailabilityVector v) {
  const std::uint32_t base = v.bits;
  for (std::uint32_t x = 0; x < row_count(); ++x) {
    if ((x & base) != base) continue;  // x does not cover v
    Trit& slot = rows_[x];
    if (slot == Trit::False) {
      throw std::logic_error("closure would flip a False row to True");
    }
    if (slot == Trit::Unset) {
      slot = Trit::True;
      ++true_count_;
    }
  }
}

void PartialTruthTable::close_false_downward(AvailabilityVector v) {
  const std::uint32_t base = v.bits;
  for (std::uint32_t y = 0; y < row_count(); ++y) {
    if ((y & base) != y) continue;  // y is not below v
    Trit& slot = rows_[y];
    if (slot == Trit::True) {
      throw std::logic_error("closure would flip a True row to False");
    }
    if (slot == Trit::Unset) {
      slot = Trit::False;
      ++false_count_;
    }
  }
}

bool is_monotone(const PartialTruthTable& t) {
  // A True row below a False row is the only way to violate monotonicity, so
  // scan each False row's submask lattice.
  const std::uint32_t rows = t.row_count();
  for (std::uint32_t x = 0; x < rows; ++x) {
    if (t.row(x) != Trit::False) continue;
    for (std::uint32_t y = x;; y = (y - 1) & x) {
      if (t.row(y) == Trit::True) return false;
      if (y == 0) break;
    }
  }
  return true;
}

bool is_compatible(const PartialTruthTable& t, const Scenario& s) {
  const Trit user = t.row(s.user);
  const Trit attacker = t.row(s.attacker);
  return user != Trit::False && attacker != Trit::True &&
         (user == Trit::Unset || attacker == Trit::Unset);
}

PartialTruthTable update_with_scenario(const PartialTruthTable& t, const Scenario& s) {
  if (s.user.bits >= t.row_count() || s.attacker.bits >= t.row_count()) {
    throw std::invalid_argument("scenario does not match the table's credential count");
  }
  if (!is_compatible(t, s)) {
    throw std::logic_error("scenario is incompatible with the table");
  }
  PartialTruthTable out = t;
  out.close_true_upward(s.user);
  out.close_false_downward(s.attacker);
  return out;
}

double success_probability(const PartialTruthTable& t, const ScenarioList& scenarios) {
  if (scenarios.n != t.n()) {
    throw std::invalid_argument("scenario list does not match the table's credential count");
  }
  double sum = 0.0;
  for (const WeightedScenario& entry : scenarios.entries) {
    if (t.row(entry.scenario.user) == Trit::True &&
        t.row(entry.scenario.attacker) == Trit::False) {
      sum += entry.probability;
    }
  }
  return sum;
}

std::uint64_t max_profile_additions(const PartialTruthTable& t) {
  const std::uint64_t total = t.row_count();
  const std::uint64_t trues = static_cast<std::uint64_t>(t.true_count());
  const std::uint64_t falses = static_cast<std::uint64_t>(t.false_count());
  const std::uint64_t profile = trues * falses;
  const std::uint64_t larger = std::max(trues, falses);
  if (2 * larger >= total) {
    if (larger == trues) return trues * (total - trues) - profile;
    return falses * (total - falses) - profile;
  }
  return viable_scenario_count(t.n()) - profile;
}

PartialTruthTable complete_arbitrarily(PartialTruthTable t, const ScenarioList& remaining,
                                       std::size_t from_index) {
  for (std::size_t i = from_index; i < remaining.entries.size(); ++i) {
    const Scenario& s = remaining.entries[i].scenario;
    if (is_compatible(t, s)) {
      t.close_true_upward(s.user);
      t.close_false_downward(s.attacker);
    }
  }
  for (std::uint32_t v = 0; v < t.row_count(); ++v) {
    if (t.row(v) == Trit::Unset) t.force_row(v, Trit::False);
  }
  return t;
}

std::vector<AvailabilityVector> minimal_true_vectors(const PartialTruthTable& t) {
  if (!t.complete()) {
    throw std::logic_error("minimal true vectors need a complete table");
  }
  std::vector<AvailabilityVector> minimal;
  for (std::uint32_t v = 0; v < t.row_count(); ++v) {
    if (t.row(v) != Trit::True) continue;
    bool is_minimal = true;
    for (int i = 0; i < t.n(); ++i) {
      const std::uint32_t bit = std::uint32_t{1} << i;
      if ((v & bit) && t.row(v ^ bit) == Trit::True) {
        is_minimal = false;
        break;
      }
    }
    if (is_minimal) minimal.push_back({v});
  }
  return minimal;
}

PartialTruthTable table_from_minimal_true_vectors(
    int n, const std::vector<AvailabilityVector>& vectors) {
  PartialTruthTable t(n);
  for (std::uint32_t v = 0; v < t.row_count(); ++v) {
    bool covered = false;
    for (AvailabilityVector a : vectors) {
      if ((v & a.bits) == a.bits) {
        covered = true;
        break;
      }
    }
    t.force_row(v, covered ? Trit::True : Trit::False);
  }
  return t;
}

std::vector<Scenario> profile_of(const PartialTruthTable& t) {
  if (t.n() > 8) {
    throw GuardError("explicit profiles are limited to 8 credentials");
  }
  std::vector<Scenario> profile;
  for (std::uint32_t u = 0; u < t.row_count(); ++u) {
    if (t.row(u) != Trit::True) continue;
    for (std::uint32_t a = 0; a < t.row_count(); ++a) {
      if (t.row(a) == Trit::False) profile.push_back({{u}, {a}});
    }
  }
  return profile;
}

MechanismSummary summarize(const PartialTruthTable& t, const ScenarioList& scenarios) {
  MechanismSummary summary;
  summary.minimal_true_vectors = minimal_true_vectors(t);
  summary.success_probability = success_probability(t, scenarios);
  summary.failure_probability = 1.0 - summary.success_probability;
  return summary;
}

std::string to_bitstring(AvailabilityVector v, int n) {
  std::string s(static_cast<std::size_t>(n), '0');
  for (int i = 0; i < n; ++i) {
    if ((v.bits >> i) & 1u) s[static_cast<std::size_t>(i)] = '1';
  }
  return s;
}

AvailabilityVector bitstring_to_vector(const std::string& s) {
  if (s.empty() || s.size() > static_cast<std::size_t>(kMaxCredentials)) {
    throw ParseError("bitstring length out of range: '" + s + "'");
  }
  std::uint32_t bits = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '1') {
      bits |= std::uint32_t{1} << i;
    } else if (s[i] != '0') {
      throw ParseError("bitstring may contain only 0 and 1: '" + s + "'");
    }
  }
  return {bits};
}

std::string format_mechanism(const PartialTruthTable& t) {
  std::ostringstream out;
  out << "n=" << t.n() << '\n';
  for (AvailabilityVector v : minimal_true_vectors(t)) {
    out << to_bitstring(v, t.n()) << '\n';
  }
  return out.str();
}

namespace {

std::string strip(const std::string& s) {
  std::size_t begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  std::size_t end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

}  // namespace

PartialTruthTable parse_mechanism(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) {
    throw ParseError("empty mechanism file");
  }
  line = strip(line);
  if (line.rfind("n=", 0) != 0) {
    throw ParseError("mechanism file must start with 'n=<count>'");
  }
  int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(line.substr(2), &used);
    if (used != line.size() - 2) throw ParseError("");
  } catch (const std::exception&) {
    throw ParseError("bad credential count in mechanism header: '" + line + "'");
  }
  if (n < 1 || n > kMaxCredentials) {
    throw ParseError("mechanism credential count out of range");
  }
  std::vector<AvailabilityVector> vectors;
  while (std::getline(in, line)) {
    line = strip(line);
    if (line.empty()) continue;
    if (line.size() != static_cast<std::size_t>(n)) {
      throw ParseError("mechanism vector '" + line + "' does not have " + std::to_string(n) +
                       " bits");
    }
    vectors.push_back(bitstring_to_vector(line));
  }
  return table_from_minimal_true_vectors(n, vectors);
}

PartialTruthTable load_mechanism(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open mechanism file: " + path);
  }
  return parse_mechanism(in);
}

}  // namespace auth
