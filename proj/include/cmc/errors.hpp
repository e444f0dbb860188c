#pragma once

#include <stdexcept>
#include <string>

namespace cmc {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A constructor or operation received arguments violating its invariants.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A closed-form expression left its real domain (negative radicand etc).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Operation requested on the wrong Delaunay family (e.g. s0 of a nodoid).
class KindError : public Error {
 public:
  using Error::Error;
};

class OutOfIntervalError : public Error {
 public:
  OutOfIntervalError(const std::string& what, double value)
      : Error(what), value_(value) {}
  double value() const noexcept { return value_; }

 private:
  double value_;
};

/// rho is undefined where z'(s) vanishes.
class VerticalTangentError : public Error {
 public:
  VerticalTangentError(const std::string& what, double s) : Error(what), s_(s) {}
  double s() const noexcept { return s_; }

 private:
  double s_;
};

class QuadratureError : public Error {
 public:
  using Error::Error;
};

class DegenerateError : public Error {
 public:
  using Error::Error;
};

class BracketFailure : public Error {
 public:
  using Error::Error;
};

/// The curve never meets an ellipsoid orthogonally (cylinder: rho = x > 0).
class NoRoot : public Error {
 public:
  using Error::Error;
};

/// Unduloid with z(s0) < z0: the sufficient condition for a contact root fails.
class ExistenceHypothesisFailed : public Error {
 public:
  ExistenceHypothesisFailed(const std::string& what, double z_at_s0, double z0)
      : Error(what), z_at_s0_(z_at_s0), z0_(z0) {}
  double z_at_s0() const noexcept { return z_at_s0_; }
  double z0() const noexcept { return z0_; }

 private:
  double z_at_s0_;
  double z0_;
};

}  // namespace cmc
