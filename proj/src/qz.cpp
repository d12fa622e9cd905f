#include "rlab/qz.hpp"

#include <complex>
#include <string>

#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

namespace rlab {

GeneralizedEigen generalized_eigen(const Eigen::MatrixXcd& x, const Eigen::MatrixXcd& y) {
  const lapack_int n = lapack_int(x.rows());
  if (x.cols() != x.rows() || y.rows() != x.rows() || y.cols() != x.cols()) {
    throw EigenSolverError("generalized_eigen: pencil matrices must be square and of equal size");
  }
  if (!x.allFinite() || !y.allFinite()) throw EigenSolverError("generalized_eigen: non-finite pencil entries");

  Eigen::MatrixXcd a = x;  // column-major copies, overwritten by zggev
  Eigen::MatrixXcd b = y;
  GeneralizedEigen out;
  out.alpha.resize(n);
  out.beta.resize(n);
  out.left.resize(n, n);
  out.right.resize(n, n);
  if (n == 0) return out;

  const lapack_int info =
      LAPACKE_zggev(LAPACK_COL_MAJOR, 'V', 'V', n, a.data(), n, b.data(), n, out.alpha.data(), out.beta.data(),
                    out.left.data(), n, out.right.data(), n);
  if (info != 0) throw EigenSolverError("QZ iteration failed (zggev info = " + std::to_string(info) + ")");
  return out;
}

}  // namespace rlab
