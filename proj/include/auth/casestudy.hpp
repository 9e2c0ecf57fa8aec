#pragma once

#include <string>

#include "auth/credmodel.hpp"
#include "auth/mechanism.hpp"

namespace auth {

enum class CaseFamily {
  Hetero,     // one loss/leak-prone credential, the rest theft-prone
  Uniform,    // every credential can be lost, leaked, or stolen
  Wallet,     // regular credentials plus easy-to-lose extras
  Questions,  // regular credentials plus easy-to-leak extras
};

struct CaseStudyConfig {
  CaseFamily family = CaseFamily::Hetero;
  int n_regular = 0;
  int n_weak = 0;
};

CaseFamily parse_case_family(const std::string& name);  // throws ParseError
const char* to_string(CaseFamily family);

// Credential layout: regular credentials occupy bits 0..n_regular-1, weak
// credentials the bits after them.

/// Credential 1: loss = leak = 0.01; credentials 2..n: theft = 0.01.
FaultModel hetero_model(int n);

/// Every credential: loss = 0.05, leak = 0.03, theft = 0.01.
FaultModel uniform_model(int n);

/// Regular: loss = leak = 0.01. Weak: loss = 0.3, leak = theft = 0.
FaultModel wallet_model(int n_regular, int n_weak);

/// Regular: loss = leak = 0.01. Weak: leak = 0.3, loss = theft = 0.
FaultModel questions_model(int n_regular, int n_weak);

FaultModel case_study_model(const CaseStudyConfig& config);

/// Any weak credential OR (floor(n/2)+1)-of-n regular credentials.
PartialTruthTable wallet_reference(int n_regular, int n_weak);

/// All weak credentials AND ceil(n/2)-of-n regular credentials.
PartialTruthTable questions_reference(int n_regular, int n_weak);

/// AND of the regular credentials, ignoring the weak ones.
PartialTruthTable and_of_regulars(int n_regular, int n_weak);

}  // namespace auth
