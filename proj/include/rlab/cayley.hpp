#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "rlab/matpoly.hpp"
#include "rlab/multipoly.hpp"

namespace rlab {

/// Coefficients of the Cayley function at a fixed hidden value,
///   f(s, t) = sum A[i_1..i_{d-1}, j_1..j_{d-1}] prod phi_{i_k}(s_k) prod phi_{j_k}(t_k),
/// with 0 <= i_k <= taus[k-1] and 0 <= j_k <= taus[d-1-k]. Stored row-major
/// over extents(): the s-axes first, then the t-axes.
struct CayleyTensor {
  DegreeGradedBasis basis;
  std::size_t d = 2;
  std::vector<std::size_t> taus;
  std::vector<cplx> coeffs;

  std::vector<std::size_t> extents() const;
};

/// Matricization of the Cayley tensor: rows indexed by (i_1..i_{d-1}),
/// columns by (j_1..j_{d-1}), both with the first index fastest.
class CayleyUnfolding {
 public:
  explicit CayleyUnfolding(std::vector<std::size_t> taus);

  const std::vector<std::size_t>& taus() const { return taus_; }
  std::size_t free_dim() const { return taus_.size(); }
  std::size_t size() const { return size_; }

  /// Extent of the i_k axis (tau_k + 1) and of the j_k axis (tau_{d-k} + 1), k 0-based.
  std::size_t row_extent(std::size_t k) const { return taus_[k] + 1; }
  std::size_t col_extent(std::size_t k) const { return taus_[taus_.size() - 1 - k] + 1; }
  const std::vector<std::size_t>& row_strides() const { return row_strides_; }
  const std::vector<std::size_t>& col_strides() const { return col_strides_; }

  std::size_t row_index(std::span<const std::size_t> i) const;
  std::size_t col_index(std::span<const std::size_t> j) const;
  std::vector<std::size_t> row_multi(std::size_t r) const;
  std::vector<std::size_t> col_multi(std::size_t c) const;

  Eigen::MatrixXcd unfold(const CayleyTensor& tensor) const;

 private:
  std::vector<std::size_t> taus_;
  std::vector<std::size_t> row_strides_;
  std::vector<std::size_t> col_strides_;
  std::size_t size_ = 1;
};

/// R(x_d) = sum_i A_i phi_i(x_d) together with the index map of its unfolding.
struct CayleyResultant {
  MatrixPolynomial matrix_poly;
  CayleyUnfolding unfolding;
  bool deflated = false;
};

/// Evaluates the determinant quotient directly. Throws InputError when
/// s_i == t_i for some i; use cayley_diagonal_value there.
cplx cayley_function_eval(const HiddenVariableForm& hv, std::span<const cplx> s, std::span<const cplx> t,
                          cplx hidden_value);

/// Worst-case degree bounds tau_k = k n - 1, n the maximal free-variable degree.
std::vector<std::size_t> cayley_taus(const HiddenVariableForm& hv);

CayleyTensor cayley_coeffs(const HiddenVariableForm& hv, cplx hidden_value);

/// f(s, t) from the coefficient tensor; valid on the diagonal s = t.
cplx cayley_tensor_eval(const CayleyTensor& tensor, std::span<const cplx> s, std::span<const cplx> t);

CayleyResultant cayley_resultant(const HiddenVariableForm& hv);

/// Removes trailing coefficient slabs whose entries are all below
/// rel_tol * max |entry|, keeping the row and column groups paired so the
/// matrix stays square, then trims the hidden-variable degree.
CayleyResultant deflate(const CayleyResultant& res, double rel_tol = 1e-12);

/// f(s = t = x_free; x_d) by contracting the coefficient tensor.
cplx cayley_diagonal_value(const HiddenVariableForm& hv, std::span<const cplx> point);

/// d/dx_d of the diagonal value at a point (original variable order), by
/// Richardson-extrapolated central differences.
cplx cayley_diagonal_derivative(const HiddenVariableForm& hv, std::span<const cplx> point);

/// Vandermonde-form eigenvectors at a root: v over the column group, w over
/// the row group (unnormalized).
struct StructuredEigvectors {
  Eigen::VectorXcd right;
  Eigen::VectorXcd left;
  double residual_right = 0.0;  // ||R v|| / (||R||_2 ||v||)
  double residual_left = 0.0;   // ||w^T R|| / (||R||_2 ||w||)
};

StructuredEigvectors cayley_structured_vectors(const CayleyResultant& res, const HiddenVariableForm& hv,
                                               std::span<const cplx> root);

/// As above, but throws StructuralError when either residual exceeds tol.
StructuredEigvectors cayley_root_eigvectors(const CayleyResultant& res, const HiddenVariableForm& hv,
                                            std::span<const cplx> root, double tol = 1e-7);

}  // namespace rlab
