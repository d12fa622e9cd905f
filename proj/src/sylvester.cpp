#include "rlab/sylvester.hpp"

#include <algorithm>

namespace rlab {

std::vector<cplx> sylvester_row(const DegreeGradedBasis& basis, std::span<const cplx> q, std::size_t i,
                                std::size_t total_len, ProductPath path) {
  if (q.empty()) throw InputError("sylvester_row: empty coefficient vector");
  if (q.size() - 1 + i >= total_len) throw InputError("sylvester_row: product degree exceeds the row length");
  std::vector<cplx> row(total_len, cplx(0.0));
  if (path == ProductPath::automatic && basis.kind() == DegreeGradedBasis::Kind::monomial) {
    std::copy(q.begin(), q.end(), row.begin() + std::ptrdiff_t(i));
    return row;
  }
  const auto nodes = basis.domain().nodes(total_len);
  Eigen::VectorXcd values(static_cast<Eigen::Index>(total_len));
  for (std::size_t j = 0; j < total_len; ++j) {
    values(static_cast<Eigen::Index>(j)) = clenshaw_eval(basis, q, nodes[j]).value * basis_eval(basis, i, nodes[j]);
  }
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(vandermonde(basis, nodes, total_len - 1));
  const Eigen::VectorXcd c = lu.solve(values);
  for (std::size_t j = 0; j < total_len; ++j) row[j] = c(static_cast<Eigen::Index>(j));
  return row;
}

namespace {

// Highest x_1 index carrying a nonzero coefficient in any x_2 slot.
std::size_t x1_degree(const MultiPoly& p) {
  const std::size_t slots = p.degrees()[1] + 1;
  std::size_t tau = 0;
  for (std::size_t i = 0; i <= p.degrees()[0]; ++i)
    for (std::size_t k = 0; k < slots; ++k)
      if (p.coeffs()[i * slots + k] != cplx(0.0)) tau = i;
  return tau;
}

std::vector<cplx> x1_slot(const MultiPoly& p, std::size_t tau, std::size_t k) {
  const std::size_t slots = p.degrees()[1] + 1;
  std::vector<cplx> out(tau + 1, cplx(0.0));
  if (k >= slots) return out;
  for (std::size_t i = 0; i <= tau; ++i) out[i] = p.coeffs()[i * slots + k];
  return out;
}

}  // namespace

SylvesterResultant sylvester_resultant(const HiddenVariableForm& hv, ProductPath path) {
  if (hv.dim() != 2) throw InputError("sylvester requires d=2");
  const MultiPoly& p1 = hv.permuted()[0];
  const MultiPoly& p2 = hv.permuted()[1];
  const std::size_t tau1 = x1_degree(p1);
  const std::size_t tau2 = x1_degree(p2);
  const std::size_t len = tau1 + tau2;
  if (len == 0) throw ConstructionError("Sylvester matrix is empty: neither polynomial depends on x_1");

  // The rows are linear in the coefficients, so each hidden slot maps to one matrix coefficient.
  const std::size_t degree = hv.hidden_degree();
  std::vector<Eigen::MatrixXcd> mats;
  for (std::size_t k = 0; k <= degree; ++k) {
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(len), static_cast<Eigen::Index>(len));
    const auto q1 = x1_slot(p1, tau1, k);
    const auto q2 = x1_slot(p2, tau2, k);
    for (std::size_t i = 0; i < len; ++i) {
      const bool first = i < tau2;
      const auto& q = first ? q1 : q2;
      if (std::all_of(q.begin(), q.end(), [](cplx z) { return z == cplx(0.0); })) continue;
      const auto row = sylvester_row(hv.basis(), q, first ? i : i - tau2, len, path);
      for (std::size_t j = 0; j < len; ++j) a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = row[j];
    }
    mats.push_back(std::move(a));
  }
  return SylvesterResultant{MatrixPolynomial(hv.basis(), std::move(mats)), tau1, tau2};
}

SylvesterEigvectors sylvester_structured_vectors(const SylvesterResultant& res, const HiddenVariableForm& hv,
                                                 std::span<const cplx> root) {
  if (root.size() != 2) throw InputError("Sylvester eigenvectors need a bivariate root");
  const auto& basis = hv.basis();
  const cplx x1 = hv.free_part(root)[0];
  const cplx x2 = root[hv.hidden_index()];
  const std::size_t len = res.tau1 + res.tau2;

  const auto q = hv.specialize(x2);
  auto truncated = [](const MultiPoly& p, std::size_t tau) {
    std::vector<cplx> c(tau + 1, cplx(0.0));
    for (std::size_t i = 0; i <= std::min(tau, p.degrees()[0]); ++i) c[i] = p.coeffs()[i];
    return c;
  };
  const auto t1 = clenshaw_eval(basis, truncated(q[0], res.tau1), x1);
  const auto t2 = clenshaw_eval(basis, truncated(q[1], res.tau2), x1);

  SylvesterEigvectors out;
  const auto phi = basis_eval_all(basis, len - 1, x1);
  out.right = Eigen::Map<const Eigen::VectorXcd>(phi.data(), static_cast<Eigen::Index>(len));
  out.left.resize(static_cast<Eigen::Index>(len));
  for (std::size_t i = 0; i < res.tau2; ++i) out.left(static_cast<Eigen::Index>(i)) = -basis.alpha(i) * t2.shift(i + 1);
  for (std::size_t i = 0; i < res.tau1; ++i) out.left(static_cast<Eigen::Index>(res.tau2 + i)) = basis.alpha(i) * t1.shift(i + 1);

  const Eigen::MatrixXcd r = matpoly_eval(res.matrix_poly, x2);
  const double rn = Eigen::JacobiSVD<Eigen::MatrixXcd>(r).singularValues()(0);
  if (rn > 0.0) {
    out.residual_right = (r * out.right).norm() / (rn * out.right.norm());
    out.residual_left = (out.left.transpose() * r).norm() / (rn * out.left.norm());
  }
  return out;
}

SylvesterEigvectors sylvester_root_eigvectors(const SylvesterResultant& res, const HiddenVariableForm& hv,
                                              std::span<const cplx> root, double tol) {
  SylvesterEigvectors out = sylvester_structured_vectors(res, hv, root);
  if (out.residual_right > tol || out.residual_left > tol) {
    throw StructuralError("Sylvester eigenvector structure violated: right residual " +
                          std::to_string(out.residual_right) + ", left residual " +
                          std::to_string(out.residual_left));
  }
  return out;
}

}  // namespace rlab
