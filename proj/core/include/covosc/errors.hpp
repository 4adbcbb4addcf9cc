#pragma once

#include <stdexcept>
#include <string>

namespace covosc {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Requested basis order lies outside the certified stability range.
class UnsupportedOrderError : public Error {
 public:
  using Error::Error;
};

/// Adaptive quadrature exhausted its panel budget before reaching the
/// requested tolerance. Carries the best available estimate.
class AccuracyError : public Error {
 public:
  AccuracyError(const std::string& what, double best_estimate, double error_estimate)
      : Error(what), best_estimate_(best_estimate), error_estimate_(error_estimate) {}

  double best_estimate() const { return best_estimate_; }
  double error_estimate() const { return error_estimate_; }

 private:
  double best_estimate_;
  double error_estimate_;
};

/// A transform produced an imaginary residual above tolerance, i.e. the
/// integrand does not satisfy the symmetry the kernel convention assumes.
class ConventionError : public Error {
 public:
  using Error::Error;
};

/// |C| >= K: the coupled Hamiltonian is not positive definite.
class SingularCouplingError : public Error {
 public:
  using Error::Error;
};

/// Invalid beam kinematics (energy below rest mass, or nonpositive mass).
class KinematicsError : public Error {
 public:
  using Error::Error;
};

/// Effective temperature is undefined for a nonpositive squeeze parameter.
class NoTemperatureError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the domain an operation supports.
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace covosc
