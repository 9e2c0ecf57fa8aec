#pragma once

#include <stdexcept>
#include <string>

namespace auth {

/// Malformed input file or value (fault-model CSV, mechanism text).
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// A size guard was hit (credential count beyond what an operation supports).
struct GuardError : std::invalid_argument {
  explicit GuardError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace auth
