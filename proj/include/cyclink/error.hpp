#pragma once

#include <stdexcept>
#include <string>

namespace cyclink {

enum class ErrorKind {
  DivisionByZero,
  TowerMismatch,
  ReducibleMinimalPolynomial,
  InseparableMinimalPolynomial,
  DegreeDivisibleByP,
  DuplicateName,
  NonPrimePower,
  ReducibleModulus,
  Unsupported,
  BetaZero,
  AlgebraMismatch,
  SingularScale,
  GammaZero,
  NormMismatch,
  UnsupportedPrime,
  NoSolutionInBudget,
  NoSolution,
  SlotHasPthRoot,
  UnsupportedConfiguration,
  ResidueUndecided,
  ParseError,
  CharacteristicMismatch,
  Internal,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace cyclink
