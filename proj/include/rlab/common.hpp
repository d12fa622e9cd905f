#pragma once

#include <complex>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace rlab {

using cplx = std::complex<double>;

inline constexpr double kEps = std::numeric_limits<double>::epsilon();

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent user input (bad JSON, mismatched dimensions).
class InputError : public Error {
 public:
  using Error::Error;
};

/// A recurrence table is too short for the requested degree.
class DegreeOverflowError : public Error {
 public:
  using Error::Error;
};

/// Resultant or interpolation construction failed.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

/// The generalized eigensolver failed or the matrix polynomial is singular.
class EigenSolverError : public Error {
 public:
  using Error::Error;
};

class NonRegularError : public EigenSolverError {
 public:
  using EigenSolverError::EigenSolverError;
};

/// A theoretical eigenvector structure did not hold; indicates a construction bug.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// Region of interest for one variable: a real interval or a complex disc.
class Domain {
 public:
  enum class Kind { interval, disc };

  static Domain interval(double lo, double hi);
  static Domain disc(cplx center, double radius);

  Kind kind() const { return kind_; }
  double lo() const { return lo_; }
  double hi() const { return hi_; }
  cplx center() const { return center_; }
  double radius() const { return radius_; }

  bool contains(cplx z, double margin = 0.0) const;

  /// Interpolation nodes: Chebyshev points of the second kind on an interval,
  /// equispaced points on the boundary circle of a disc.
  std::vector<cplx> nodes(std::size_t count) const;

  /// Chebyshev points of the first kind (interval) or rotated circle points
  /// (disc). All nodes are distinct and none is an endpoint.
  std::vector<cplx> interior_nodes(std::size_t count) const;

  /// Dense sample of the set where sup |phi_k| is attained (the interval or
  /// the circle).
  std::vector<cplx> sup_grid(std::size_t count) const;

  friend bool operator==(const Domain&, const Domain&) = default;

 private:
  Kind kind_ = Kind::interval;
  double lo_ = -1.0;
  double hi_ = 1.0;
  cplx center_{0.0, 0.0};
  double radius_ = 1.0;
};

}  // namespace rlab
