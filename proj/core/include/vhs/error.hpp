#pragma once

#include <stdexcept>
#include <string>

namespace vhs {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller violated a documented precondition (shape mismatch, bad Hodge vector, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A requested computation would exceed the configured size budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed; carries the first counterexample in what().
class CheckFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace vhs
