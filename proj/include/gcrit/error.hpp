#pragma once

#include <stdexcept>
#include <string>

namespace gcrit {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the mathematical domain of an operation (e.g. r <= 0).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Invalid user-supplied configuration. `field()` names the offending key when known.
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& msg, std::string field = {})
      : Error(msg), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// A potential for which a bound is undefined (zero or divergent moment integrals).
class DegeneratePotentialError : public Error {
 public:
  using Error::Error;
};

/// Numerical routine did not reach its tolerance. Carries the best estimate obtained.
class AccuracyError : public Error {
 public:
  AccuracyError(const std::string& msg, double best_estimate)
      : Error(msg), best_estimate_(best_estimate) {}
  double best_estimate() const noexcept { return best_estimate_; }

 private:
  double best_estimate_;
};

/// The tail of a potential never falls below the requested tolerance within the radius cap.
class TruncationError : public Error {
 public:
  using Error::Error;
};

/// A root or threshold search ran off the end of its admissible range.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// ODE integration failure (step-size underflow, non-finite state).
class IntegrationError : public Error {
 public:
  using Error::Error;
};

}  // namespace gcrit
