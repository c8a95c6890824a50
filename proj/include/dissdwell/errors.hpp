#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace dissdwell {

/// Base of every error thrown by the library. The CLI maps the concrete
/// subclasses onto process exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation (t < 0, NaN, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Inputs are valid numbers but outside the physical regime where a closed
/// form holds (zeta < 1, particle stopping inside the classical interval).
class RegimeError : public Error {
 public:
  using Error::Error;
};

/// A configuration field violates its invariant.
class ValidationError : public Error {
 public:
  ValidationError(std::string field, const std::string& what)
      : Error(field + ": " + what), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// Root bracket does not contain a sign change.
class BracketingError : public Error {
 public:
  using Error::Error;
};

/// An iterative method stopped before meeting its tolerance. Carries the best
/// value obtained so far.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double best_estimate)
      : Error(what), best_estimate_(best_estimate) {}

  double best_estimate() const noexcept { return best_estimate_; }

 private:
  double best_estimate_;
};

class IoError : public Error {
 public:
  IoError(std::string path, const std::string& what)
      : Error(path + ": " + what), path_(std::move(path)) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace dissdwell
