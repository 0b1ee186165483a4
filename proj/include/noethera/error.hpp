#pragma once

#include <stdexcept>
#include <string>

namespace noethera {

// Exit codes shared by the CLI and the corpus runner.
enum class ExitCode : int {
  Success = 0,
  InvariantBreach = 1,
  BudgetExhausted = 2,
  InputError = 3,
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual ExitCode exit_code() const noexcept = 0;
};

/// Malformed or out-of-model input: bad moduli, reducible polynomials,
/// non-ring structure constants, syntax errors.
class InputError : public Error {
 public:
  using Error::Error;
  ExitCode exit_code() const noexcept override { return ExitCode::InputError; }
};

/// A configured size, time or combinatorial cap was hit.
class BudgetError : public Error {
 public:
  using Error::Error;
  ExitCode exit_code() const noexcept override { return ExitCode::BudgetExhausted; }
};

/// A cross-check that must hold mathematically failed.
class InvariantError : public Error {
 public:
  using Error::Error;
  ExitCode exit_code() const noexcept override { return ExitCode::InvariantBreach; }
};

}  // namespace noethera
