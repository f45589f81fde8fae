#pragma once

#include <stdexcept>
#include <string>

namespace planarvac {

// Base for every error this library throws on purpose.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Argument outside the documented domain of an operation.
struct DomainError : Error {
  using Error::Error;
};

// Evaluation requested exactly at a pole (gamma at nonpositive integers,
// Whittaker M at 2*mu a negative integer).
struct PoleError : Error {
  using Error::Error;
};

// A series/iteration could not meet its tolerance within its budget.
struct ConvergenceError : Error {
  using Error::Error;
};

// Adaptive quadrature could not meet the requested tolerance.
struct QuadratureError : ConvergenceError {
  using ConvergenceError::ConvergenceError;
};

// Result magnitude exceeds double range; callers rescale instead of
// receiving Inf.
struct OverflowError : Error {
  using Error::Error;
};

// Root bracketing found no sign change.
struct NoRootError : Error {
  using Error::Error;
};

// Fixed-point iterate left the subcritical region.
struct SupercriticalExcursionError : ConvergenceError {
  using ConvergenceError::ConvergenceError;
};

// Bad run configuration (CLI surface).
struct ValidationError : Error {
  using Error::Error;
};

}  // namespace planarvac
