#include "mdyn/error.hpp"

namespace mdyn {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidPolynomial: return "InvalidPolynomial";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::HasZeroRoot: return "HasZeroRoot";
    case ErrorKind::NotSquarefree: return "NotSquarefree";
    case ErrorKind::CriterionNotApplicable: return "CriterionNotApplicable";
    case ErrorKind::BudgetExhausted: return "BudgetExhausted";
    case ErrorKind::CombinatorialBudgetExceeded: return "CombinatorialBudgetExceeded";
    case ErrorKind::DegreeCapExceeded: return "DegreeCapExceeded";
    case ErrorKind::ReducibleInput: return "ReducibleInput";
    case ErrorKind::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorKind::NotApplicable: return "NotApplicable";
    case ErrorKind::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::HypothesisUndecidable: return "HypothesisUndecidable";
    case ErrorKind::CatalogMissingDegree: return "CatalogMissingDegree";
    case ErrorKind::DegreeCollapse: return "DegreeCollapse";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

ParseError::ParseError(std::size_t position, const std::string& message)
    : Error(ErrorKind::ParseError, message + " at position " + std::to_string(position)),
      position_(position) {}

}  // namespace mdyn
