#pragma once

// Shared test helpers: seeded random fault models and small independent
// oracles. The oracles deliberately avoid the library's optimized paths so
// they can stand as ground truth for them.

#include <cstdint>
#include <random>
#include <vector>

#include "auth/baselines.hpp"
#include "auth/credmodel.hpp"
#include "auth/mechanism.hpp"

namespace testsupport {

// Random credential row: four uniform draws normalized to sum 1, with an
// optional chance of zeroing individual fault states to exercise the
// drop-zero paths.
inline auth::CredentialSpec random_cred(std::mt19937_64& rng, bool allow_zeros = true) {
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  double values[4];
  for (double& v : values) v = uniform(rng) + 1e-6;
  if (allow_zeros) {
    for (int i = 1; i < 4; ++i) {
      if (uniform(rng) < 0.3) values[i] = 0.0;
    }
    // Occasionally a credential that is never safe.
    if (uniform(rng) < 0.1 && values[1] + values[2] + values[3] > 0.0) values[0] = 0.0;
  }
  const double sum = values[0] + values[1] + values[2] + values[3];
  return auth::CredentialSpec::make(values[0] / sum, values[1] / sum, values[2] / sum,
                                    values[3] / sum);
}

inline auth::FaultModel random_model(int n, std::mt19937_64& rng, bool allow_zeros = true) {
  std::vector<auth::CredentialSpec> creds;
  creds.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) creds.push_back(random_cred(rng, allow_zeros));
  return auth::FaultModel(std::move(creds));
}

// Independent monotonicity oracle: quadratic scan over all ordered pairs.
inline bool naive_monotone(const auth::PartialTruthTable& t) {
  for (std::uint32_t x = 0; x < t.row_count(); ++x) {
    for (std::uint32_t y = 0; y < t.row_count(); ++y) {
      if ((x & y) != y) continue;  // need x >= y
      if (t.row(y) == auth::Trit::True && t.row(x) == auth::Trit::False) return false;
    }
  }
  return true;
}

// Independent monotone-function enumeration for small n: filter every one of
// the 2^(2^n) functions by the naive scan. Usable through n = 4.
inline std::vector<std::uint64_t> brute_force_monotone_functions(int n) {
  const std::uint32_t rows = std::uint32_t{1} << n;
  std::vector<std::uint64_t> result;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << rows); ++bits) {
    bool ok = true;
    for (std::uint32_t x = 0; x < rows && ok; ++x) {
      for (std::uint32_t y = 0; y < rows; ++y) {
        if ((x & y) != y) continue;
        if (((bits >> y) & 1u) && !((bits >> x) & 1u)) {
          ok = false;
          break;
        }
      }
    }
    if (ok) result.push_back(bits);
  }
  return result;
}

// All monotone completions of a partial table, via the catalog.
inline std::vector<auth::PartialTruthTable> monotone_completions(
    const auth::PartialTruthTable& t) {
  const auth::MonotoneCatalog catalog = auth::enumerate_monotone(t.n());
  std::vector<auth::PartialTruthTable> result;
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    bool extends = true;
    for (std::uint32_t v = 0; v < t.row_count() && extends; ++v) {
      if (t.row(v) == auth::Trit::True && !catalog.eval(i, v)) extends = false;
      if (t.row(v) == auth::Trit::False && catalog.eval(i, v)) extends = false;
    }
    if (extends) result.push_back(catalog.table(i));
  }
  return result;
}

inline std::uint64_t profile_size(const auth::PartialTruthTable& t) {
  return static_cast<std::uint64_t>(t.true_count()) *
         static_cast<std::uint64_t>(t.false_count());
}

inline auth::Scenario scenario(std::uint32_t user, std::uint32_t attacker) {
  return auth::Scenario{{user}, {attacker}};
}

}  // namespace testsupport
