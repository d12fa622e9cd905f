#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "rlab/basis.hpp"

namespace rlab {

/// P(lambda) = sum_{i=0}^{K} A_i phi_i(lambda) with square N x N coefficients.
class MatrixPolynomial {
 public:
  MatrixPolynomial(DegreeGradedBasis basis, std::vector<Eigen::MatrixXcd> coeffs);

  const DegreeGradedBasis& basis() const { return basis_; }
  std::size_t size() const { return std::size_t(coeffs_.front().rows()); }
  std::size_t degree() const { return coeffs_.size() - 1; }
  const std::vector<Eigen::MatrixXcd>& coeffs() const { return coeffs_; }
  const Eigen::MatrixXcd& coeff(std::size_t i) const { return coeffs_.at(i); }

  /// True when the stored leading coefficient is exactly zero, so the nominal
  /// degree exceeds the actual one.
  bool degree_deflated() const { return degree_deflated_; }

  /// max_i ||A_i||_2.
  double scale() const;

  /// Drops trailing coefficients with max |entry| <= rel_tol * max_i max|A_i|.
  MatrixPolynomial trimmed(double rel_tol) const;

  /// Keeps only the listed rows and columns of every coefficient.
  MatrixPolynomial restricted(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;

 private:
  DegreeGradedBasis basis_;
  std::vector<Eigen::MatrixXcd> coeffs_;
  bool degree_deflated_ = false;
};

Eigen::MatrixXcd matpoly_eval(const MatrixPolynomial& p, cplx lambda);

/// P'(lambda), applying the Clenshaw derivative identity entrywise.
Eigen::MatrixXcd matpoly_deriv_eval(const MatrixPolynomial& p, cplx lambda);

/// Linear pencil X - lambda Y of size N K whose right eigenvectors stack
/// phi_0(lambda) z, ..., phi_{K-1}(lambda) z.
struct Pencil {
  Eigen::MatrixXcd x;
  Eigen::MatrixXcd y;
};

Pencil linearize(const MatrixPolynomial& p);

struct Eigenpair {
  cplx lambda{};
  Eigen::VectorXcd right;  // P(lambda) v = 0, ||v|| = 1
  Eigen::VectorXcd left;   // w^T P(lambda) = 0, ||w|| = 1
  double residual_right = 0.0;
  double residual_left = 0.0;
  bool simple = true;
};

struct PolyEigOptions {
  double simplicity_tol = 1e-8;       // relative eigenvalue separation
  double infinite_tol_factor = 1e3;   // |beta| < factor * eps * pencil norm -> infinite
  double regularity_tol = 1e-13;      // sigma_min / sigma_max of P at random probes
  bool refine = true;                 // one inverse-iteration step per eigenvector
  std::uint64_t probe_seed = 0;
};

struct PolyEigResult {
  std::vector<Eigenpair> pairs;               // finite eigenvalues only
  std::vector<std::pair<cplx, cplx>> infinite;  // (alpha, beta) of pencil eigenvalues at infinity
  std::size_t total() const { return pairs.size() + infinite.size(); }
};

/// det P(lambda_0) != 0 at some random probe lambda_0.
bool is_regular(const MatrixPolynomial& p, const PolyEigOptions& opts = {});

PolyEigResult polyeig(const MatrixPolynomial& p, const PolyEigOptions& opts = {});

/// ||v|| ||w|| / |w^T P'(lambda) v|, or +inf when the denominator is at roundoff
/// level (non-simple eigenvalue).
double eig_condition(const MatrixPolynomial& p, cplx lambda, const Eigen::VectorXcd& right,
                     const Eigen::VectorXcd& left);
double eig_condition(const MatrixPolynomial& p, const Eigenpair& pair);

}  // namespace rlab
