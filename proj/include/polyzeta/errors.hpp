#pragma once

#include <stdexcept>
#include <string>

namespace polyzeta {

// Base of every error thrown by the library. The CLI maps each subclass to a
// fixed exit status (see cli.hpp).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input (polynomial literals, model files, flags).
class ParseError : public Error {
 public:
  using Error::Error;
};

// Argument lies on or too close to a singularity (Gamma poles, s = 1, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Polynomial does not define an admissible spectrum: a root sits on a
// nonnegative integer, a_0 vanishes, or a degeneracy goes negative.
class SpectrumError : public Error {
 public:
  using Error::Error;
};

// Caller violated a documented precondition (e.g. unshifted closed form with
// a root in the right half plane).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Request is outside what the routine supports (table limits, degree caps).
class CapabilityError : public Error {
 public:
  using Error::Error;
};

// Iterative routine failed to converge.
class NumericError : public Error {
 public:
  using Error::Error;
};

// Truncation bound exceeded the requested tolerance.
class AccuracyError : public Error {
 public:
  AccuracyError(const std::string& what, double achieved_bound)
      : Error(what), achieved_bound_(achieved_bound) {}

  double achieved_bound() const noexcept { return achieved_bound_; }

 private:
  double achieved_bound_;
};

}  // namespace polyzeta
