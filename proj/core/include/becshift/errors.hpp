#pragma once

#include <stdexcept>
#include <string>

namespace becshift {

// Common base so callers can catch any library failure in one clause.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Argument outside the physical or mathematical domain of an operation.
class DomainError : public Error {
public:
  using Error::Error;
};

// The requested quantity is genuinely infinite: zeta at 1, g_nu(1) for nu <= 1, ...
class DivergenceError : public Error {
public:
  using Error::Error;
};

// An iterative scheme (series summation, bracketing, root polish) hit its cap.
class ConvergenceError : public Error {
public:
  using Error::Error;
};

// A below-threshold fluctuation needs an infrared cutoff that was not supplied.
class RegularizationError : public Error {
public:
  using Error::Error;
};

// Quadrature exhausted its budget without certifying the requested tolerance.
class AccuracyError : public Error {
public:
  AccuracyError(const std::string& what, double estimate)
      : Error(what), estimate_(estimate) {}

  // Best value obtained before giving up.
  double estimate() const noexcept { return estimate_; }

private:
  double estimate_;
};

}  // namespace becshift
