#include "auth/casestudy.hpp"

#include <bit>

namespace auth {

namespace {

CredentialSpec regular_cred() { return CredentialSpec::make(0.98, 0.01, 0.01, 0.0); }

void check_counts(int n_regular, int n_weak) {
  if (n_regular < 1 || n_weak < 0 || n_regular + n_weak > kMaxCredentials) {
    throw GuardError("case-study credential counts out of range");
  }
}

}  // namespace

CaseFamily parse_case_family(const std::string& name) {
  if (name == "hetero") return CaseFamily::Hetero;
  if (name == "uniform") return CaseFamily::Uniform;
  if (name == "wallet") return CaseFamily::Wallet;
  if (name == "questions") return CaseFamily::Questions;
  throw ParseError("unknown case-study family: '" + name + "'");
}

const char* to_string(CaseFamily family) {
  switch (family) {
    case CaseFamily::Hetero:
      return "hetero";
    case CaseFamily::Uniform:
      return "uniform";
    case CaseFamily::Wallet:
      return "wallet";
    case CaseFamily::Questions:
      return "questions";
  }
  return "?";
}

FaultModel hetero_model(int n) {
  std::vector<CredentialSpec> creds;
  creds.push_back(CredentialSpec::make(0.98, 0.01, 0.01, 0.0));
  for (int i = 1; i < n; ++i) {
    creds.push_back(CredentialSpec::make(0.99, 0.0, 0.0, 0.01));
  }
  return FaultModel(std::move(creds));
}

FaultModel uniform_model(int n) {
  std::vector<CredentialSpec> creds(static_cast<std::size_t>(n),
                                    CredentialSpec::make(0.91, 0.05, 0.03, 0.01));
  return FaultModel(std::move(creds));
}

FaultModel wallet_model(int n_regular, int n_weak) {
  check_counts(n_regular, n_weak);
  std::vector<CredentialSpec> creds(static_cast<std::size_t>(n_regular), regular_cred());
  creds.insert(creds.end(), static_cast<std::size_t>(n_weak),
               CredentialSpec::make(0.7, 0.3, 0.0, 0.0));
  return FaultModel(std::move(creds));
}

FaultModel questions_model(int n_regular, int n_weak) {
  check_counts(n_regular, n_weak);
  std::vector<CredentialSpec> creds(static_cast<std::size_t>(n_regular), regular_cred());
  creds.insert(creds.end(), static_cast<std::size_t>(n_weak),
               CredentialSpec::make(0.7, 0.0, 0.3, 0.0));
  return FaultModel(std::move(creds));
}

FaultModel case_study_model(const CaseStudyConfig& config) {
  switch (config.family) {
    case CaseFamily::Hetero:
      return hetero_model(config.n_regular + config.n_weak);
    case CaseFamily::Uniform:
      return uniform_model(config.n_regular + config.n_weak);
    case CaseFamily::Wallet:
      return wallet_model(config.n_regular, config.n_weak);
    case CaseFamily::Questions:
      return questions_model(config.n_regular, config.n_weak);
  }
  throw GuardError("unknown case-study family");
}

PartialTruthTable wallet_reference(int n_regular, int n_weak) {
  check_counts(n_regular, n_weak);
  const int n = n_regular + n_weak;
  const std::uint32_t regular_mask = (std::uint32_t{1} << n_regular) - 1;
  const std::uint32_t weak_mask = ((std::uint32_t{1} << n) - 1) & ~regular_mask;
  const int threshold = n_regular / 2 + 1;
  PartialTruthTable t(n);
  for (std::uint32_t v = 0; v < t.row_count(); ++v) {
    const bool any_weak = (v & weak_mask) != 0;
    const bool enough_regular = std::popcount(v & regular_mask) >= threshold;
    t.force_row(v, (any_weak || enough_regular) ? Trit::True : Trit::False);
  }
  return t;
}

PartialTruthTable questions_reference(int n_regular, int n_weak) {
  check_counts(n_regular, n_weak);
  const int n = n_regular + n_weak;
  const std::uint32_t regular_mask = (std::uint32_t{1} << n_regular) - 1;
  const std::uint32_t weak_mask = ((std::uint32_t{1} << n) - 1) & ~regular_mask;
  const int threshold = (n_regular + 1) / 2;
  PartialTruthTable t(n);
  for (std::uint32_t v = 0; v < t.row_count(); ++v) {
    const bool all_weak = (v & weak_mask) == weak_mask;
    const bool enough_regular = std::popcount(v & regular_mask) >= threshold;
    t.force_row(v, (all_weak && enough_regular) ? Trit::True : Trit::False);
  }
  return t;
}

PartialTruthTable and_of_regulars(int n_regular, int n_weak) {
  check_counts(n_regular, n_weak);
  const int n = n_regular + n_weak;
  const std::uint32_t regular_mask = (std::uint32_t{1} << n_regular) - 1;
  PartialTruthTable t(n);
  for (std::uint32_t v = 0; v < t.row_count(); ++v) {
    t.force_row(v, (v & regular_mask) == regular_mask ? Trit::True : Trit::False);
  }
  return t;
}

}  // namespace auth
