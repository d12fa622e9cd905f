#pragma once

#include <Eigen/Dense>

#include "rlab/common.hpp"

namespace rlab {

/// Generalized eigendecomposition of the pencil X - lambda Y:
/// lambda_i = alpha_i / beta_i, X vr_i = lambda_i Y vr_i, vl_i^H X = lambda_i vl_i^H Y.
struct GeneralizedEigen {
  Eigen::VectorXcd alpha;
  Eigen::VectorXcd beta;
  Eigen::MatrixXcd left;
  Eigen::MatrixXcd right;
};

/// Dense complex QZ (LAPACK zggev). Throws EigenSolverError on failure.
GeneralizedEigen generalized_eigen(const Eigen::MatrixXcd& x, const Eigen::MatrixXcd& y);

}  // namespace rlab
