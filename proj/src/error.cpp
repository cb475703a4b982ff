#include "niep/error.hpp"

namespace niep {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BackendMismatch: return "BackendMismatch";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::DivisionByZeroPolynomial: return "DivisionByZeroPolynomial";
    case ErrorKind::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorKind::NotMonic: return "NotMonic";
    case ErrorKind::BadConstantTerm: return "BadConstantTerm";
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::NotApplicable: return "NotApplicable";
    case ErrorKind::BadAngle: return "BadAngle";
    case ErrorKind::BadDimension: return "BadDimension";
    case ErrorKind::InfeasibleCandidate: return "InfeasibleCandidate";
    case ErrorKind::InfeasibleLayout: return "InfeasibleLayout";
    case ErrorKind::BadModulus: return "BadModulus";
    case ErrorKind::WrongBackend: return "WrongBackend";
    case ErrorKind::NonRealRequired: return "NonRealRequired";
    case ErrorKind::PerronViolated: return "PerronViolated";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UsageError: return "UsageError";
  }
  return "Unknown";
}

}  // namespace niep
