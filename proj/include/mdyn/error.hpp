#pragma once

#include <stdexcept>
#include <string>

namespace mdyn {

enum class ErrorKind {
  InvalidPolynomial,
  ParseError,
  NotDivisible,
  HasZeroRoot,
  NotSquarefree,
  CriterionNotApplicable,
  BudgetExhausted,
  CombinatorialBudgetExceeded,
  DegreeCapExceeded,
  ReducibleInput,
  DegreeTooSmall,
  NotApplicable,
  ParameterOutOfRange,
  HypothesisViolated,
  HypothesisUndecidable,
  CatalogMissingDegree,
  DegreeCollapse,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Parse failures carry the 0-based character offset of the problem.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace mdyn
