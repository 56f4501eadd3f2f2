#pragma once

#include <stdexcept>
#include <string>

namespace jordanlab {

// Base for all domain errors raised by the toolkit. The CLI maps these to
// exit code 1 (domain verdict) or 2 (bad input), depending on the type.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct NotPrimeError : Error {
  explicit NotPrimeError(const std::string& w) : Error(w) {}
};
struct CapExceededError : Error {
  explicit CapExceededError(const std::string& w) : Error(w) {}
};
struct BadQError : Error {
  explicit BadQError(const std::string& w) : Error(w) {}
};
struct TooLargeError : Error {
  explicit TooLargeError(const std::string& w) : Error(w) {}
};
struct BudgetExceededError : Error {
  explicit BudgetExceededError(const std::string& w) : Error(w) {}
};
struct NoPointsError : Error {
  explicit NoPointsError(const std::string& w) : Error(w) {}
};
struct AmbientMismatchError : Error {
  explicit AmbientMismatchError(const std::string& w) : Error(w) {}
};
struct NotInvertibleError : Error {
  explicit NotInvertibleError(const std::string& w) : Error(w) {}
};
struct BadCharacteristicError : Error {
  explicit BadCharacteristicError(const std::string& w) : Error(w) {}
};
struct NotAGroupPointError : Error {
  explicit NotAGroupPointError(const std::string& w) : Error(w) {}
};
struct UnknownRuleError : Error {
  explicit UnknownRuleError(const std::string& w) : Error(w) {}
};
struct MissingParamError : Error {
  explicit MissingParamError(const std::string& w) : Error(w) {}
};
struct BadTypeError : Error {
  explicit BadTypeError(const std::string& w) : Error(w) {}
};
struct NotNormalError : Error {
  explicit NotNormalError(const std::string& w) : Error(w) {}
};
struct BadInputError : Error {
  explicit BadInputError(const std::string& w) : Error(w) {}
};
struct UnsupportedTypeError : Error {
  explicit UnsupportedTypeError(const std::string& w) : Error(w) {}
};
struct NoRegularUnipotentError : Error {
  explicit NoRegularUnipotentError(const std::string& w) : Error(w) {}
};
struct NotAFieldError : Error {
  explicit NotAFieldError(const std::string& w) : Error(w) {}
};
struct InclusionFailedError : Error {
  explicit InclusionFailedError(const std::string& w) : Error(w) {}
};
struct NotContainedError : Error {
  explicit NotContainedError(const std::string& w) : Error(w) {}
};
struct NoMatchError : Error {
  explicit NoMatchError(const std::string& w) : Error(w) {}
};

// Raised by decompose() when one of the four certified clauses fails to
// verify. Never emitted as part of a report; a throw here is a finding.
struct VerificationFailedError : Error {
  std::string clause;
  VerificationFailedError(const std::string& clause_, const std::string& witness)
      : Error("clause " + clause_ + " failed verification: " + witness), clause(clause_) {}
};

}  // namespace jordanlab
