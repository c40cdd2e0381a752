#pragma once

#include <stdexcept>
#include <string>

namespace gt {

/// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A caller passed something outside an operation's contract
/// (wrong jet order, point outside the domain, mismatched sizes, ...).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// A required capability is unavailable, e.g. a coefficient cannot supply
/// a derivative order and its finite-difference fallback is disabled.
class CapabilityError : public Error {
 public:
  using Error::Error;
};

/// A user-supplied function produced a non-finite value.
class EvaluationError : public Error {
 public:
  using Error::Error;
};

/// Quadrature ran out of panels before reaching the requested tolerance.
/// Carries the best value obtained and its error estimate.
class AccuracyError : public Error {
 public:
  AccuracyError(const std::string& msg, double best_value, double error_estimate)
      : Error(msg), best_value(best_value), error_estimate(error_estimate) {}
  double best_value;
  double error_estimate;
};

/// The step-size control drove the step below the configured minimum,
/// or a marching scheme hit a near-singular diagonal factor.
class StepSizeError : public Error {
 public:
  StepSizeError(const std::string& msg, double location)
      : Error(msg), location(location) {}
  double location;
};

/// A step or iteration budget was exhausted.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Malformed input: problem files, expression text, grid specs,
/// unknown catalogue names. The CLI maps this to exit code 2.
class InputError : public Error {
 public:
  using Error::Error;
};

}  // namespace gt
