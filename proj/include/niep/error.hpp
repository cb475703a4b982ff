#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace niep {

enum class ErrorKind {
  BackendMismatch,
  DivisionByZero,
  DivisionByZeroPolynomial,
  DegreeTooSmall,
  NotMonic,
  BadConstantTerm,
  NotSquare,
  NotApplicable,
  BadAngle,
  BadDimension,
  InfeasibleCandidate,
  InfeasibleLayout,
  BadModulus,
  WrongBackend,
  NonRealRequired,
  PerronViolated,
  ParseError,
  UsageError,
};

std::string_view to_string(ErrorKind kind);

/// Every failure the library reports carries one of the ErrorKind tags so
/// callers (and the CLI exit-code mapping) can branch on it.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace niep
