#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "rlab/matpoly.hpp"
#include "rlab/multipoly.hpp"

namespace rlab {

enum class ProductPath { automatic, interpolate };

/// Coefficients of q(x) phi_i(x) in the basis, padded to total_len. The
/// automatic path shifts q exactly in the monomial basis and otherwise
/// evaluates the product at total_len nodes and solves the Vandermonde system.
std::vector<cplx> sylvester_row(const DegreeGradedBasis& basis, std::span<const cplx> q, std::size_t i,
                                std::size_t total_len, ProductPath path = ProductPath::automatic);

/// Rows 0..tau2-1 hold q_1 phi_i, rows tau2..tau1+tau2-1 hold q_2 phi_i.
struct SylvesterResultant {
  MatrixPolynomial matrix_poly;
  std::size_t tau1 = 0;
  std::size_t tau2 = 0;
};

/// Requires d = 2 (InputError otherwise).
SylvesterResultant sylvester_resultant(const HiddenVariableForm& hv, ProductPath path = ProductPath::automatic);

struct SylvesterEigvectors {
  Eigen::VectorXcd right;  // phi_k(x_1*)
  Eigen::VectorXcd left;   // signed, scaled Clenshaw shifts of q_2 and q_1
  double residual_right = 0.0;  // ||R v|| / (||R||_2 ||v||)
  double residual_left = 0.0;
};

SylvesterEigvectors sylvester_structured_vectors(const SylvesterResultant& res, const HiddenVariableForm& hv,
                                                 std::span<const cplx> root);

/// As above, but throws StructuralError when either residual exceeds tol.
SylvesterEigvectors sylvester_root_eigvectors(const SylvesterResultant& res, const HiddenVariableForm& hv,
                                              std::span<const cplx> root, double tol = 1e-7);

}  // namespace rlab
