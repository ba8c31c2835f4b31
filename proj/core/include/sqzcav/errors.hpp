#pragma once

#include <stdexcept>
#include <string>

namespace sqzcav {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter or precondition violation (bad drive strength, wrong regime,
/// mismatched dimensions, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A scenario file that does not validate. `field` is the offending key path.
class ConfigError : public Error {
 public:
  ConfigError(std::string field, const std::string& message)
      : Error(field.empty() ? message : field + ": " + message), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// A run aborted because a physical diagnostic (norm, trace, positivity,
/// truncation) left its tolerance band.
class NumericalDiagnostic : public Error {
 public:
  using Error::Error;
};

/// An iterative procedure (root finder, adaptive stepper, peak search) did not
/// reach its target.
class ConvergenceFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace sqzcav
