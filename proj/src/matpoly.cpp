#include "rlab/matpoly.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "rlab/qz.hpp"

namespace rlab {

namespace {

double spectral_norm(const Eigen::MatrixXcd& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  return svd.singularValues()(0);
}

double max_abs(const Eigen::MatrixXcd& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

}  // namespace

MatrixPolynomial::MatrixPolynomial(DegreeGradedBasis basis, std::vector<Eigen::MatrixXcd> coeffs)
    : basis_(std::move(basis)), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw InputError("matrix polynomial needs at least one coefficient");
  const auto n = coeffs_.front().rows();
  for (const auto& a : coeffs_) {
    if (a.rows() != n || a.cols() != n) throw InputError("matrix polynomial coefficients must be square and equal-sized");
  }
  if (degree() > basis_.max_degree()) throw DegreeOverflowError("matrix polynomial degree exceeds the basis tables");
  degree_deflated_ = degree() > 0 && coeffs_.back().isZero(0.0);
}

double MatrixPolynomial::scale() const {
  double s = 0.0;
  for (const auto& a : coeffs_) s = std::max(s, spectral_norm(a));
  return s;
}

MatrixPolynomial MatrixPolynomial::trimmed(double rel_tol) const {
  double overall = 0.0;
  for (const auto& a : coeffs_) overall = std::max(overall, max_abs(a));
  std::vector<Eigen::MatrixXcd> kept = coeffs_;
  while (kept.size() > 1 && max_abs(kept.back()) <= rel_tol * overall) kept.pop_back();
  return MatrixPolynomial(basis_, std::move(kept));
}

MatrixPolynomial MatrixPolynomial::restricted(const std::vector<std::size_t>& rows,
                                              const std::vector<std::size_t>& cols) const {
  std::vector<Eigen::MatrixXcd> out;
  for (const auto& a : coeffs_) {
    Eigen::MatrixXcd b(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < cols.size(); ++c) b(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = a(static_cast<Eigen::Index>(rows[r]), static_cast<Eigen::Index>(cols[c]));
    out.push_back(std::move(b));
  }
  return MatrixPolynomial(basis_, std::move(out));
}

Eigen::MatrixXcd matpoly_eval(const MatrixPolynomial& p, cplx lambda) {
  const auto phi = basis_eval_all(p.basis(), p.degree(), lambda);
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(p.size()), static_cast<Eigen::Index>(p.size()));
  for (std::size_t i = 0; i <= p.degree(); ++i) out += phi[i] * p.coeff(i);
  return out;
}

Eigen::MatrixXcd matpoly_deriv_eval(const MatrixPolynomial& p, cplx lambda) {
  const auto n = static_cast<Eigen::Index>(p.size());
  Eigen::MatrixXcd out(n, n);
  std::vector<cplx> entry(p.degree() + 1);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) {
      for (std::size_t i = 0; i <= p.degree(); ++i) entry[i] = p.coeff(i)(r, c);
      out(r, c) = derivative_eval(p.basis(), entry, lambda);
    }
  }
  return out;
}

Pencil linearize(const MatrixPolynomial& p) {
  const std::size_t k_deg = p.degree();
  if (k_deg == 0) throw EigenSolverError("a constant matrix polynomial has no eigenvalues to linearize");
  const auto n = static_cast<Eigen::Index>(p.size());
  const auto big = n * static_cast<Eigen::Index>(k_deg);
  const auto& basis = p.basis();
  Pencil pen{Eigen::MatrixXcd::Zero(big, big), Eigen::MatrixXcd::Zero(big, big)};
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(n, n);
  auto blk = [n](Eigen::MatrixXcd& m, std::size_t r, std::size_t c) {
    return m.block(static_cast<Eigen::Index>(r) * n, static_cast<Eigen::Index>(c) * n, n, n);
  };

  // Recurrence rows: z_{k+1} - beta_k z_k - sum_j gamma_{k,j} z_{j-1} = lambda alpha_k z_k.
  for (std::size_t k = 0; k + 1 < k_deg; ++k) {
    blk(pen.x, k, k + 1) += id;
    blk(pen.x, k, k) -= basis.beta(k) * id;
    for (std::size_t j = 1; j <= k; ++j) {
      const cplx g = basis.gamma(k, j);
      if (g != cplx(0.0)) blk(pen.x, k, j - 1) -= g * id;
    }
    blk(pen.y, k, k) += basis.alpha(k) * id;
  }

  // Last block row: P(lambda) z with phi_K eliminated through its recurrence.
  const std::size_t last = k_deg - 1;
  const Eigen::MatrixXcd& lead = p.coeff(k_deg);
  for (std::size_t i = 0; i < k_deg; ++i) blk(pen.x, last, i) += p.coeff(i);
  blk(pen.x, last, last) += basis.beta(last) * lead;
  for (std::size_t j = 1; j <= last; ++j) {
    const cplx g = basis.gamma(last, j);
    if (g != cplx(0.0)) blk(pen.x, last, j - 1) += g * lead;
  }
  blk(pen.y, last, last) -= basis.alpha(last) * lead;
  return pen;
}

bool is_regular(const MatrixPolynomial& p, const PolyEigOptions& opts) {
  std::mt19937_64 rng(opts.probe_seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  const Domain& dom = p.basis().domain();
  const cplx center = dom.kind() == Domain::Kind::interval ? cplx(0.5 * (dom.lo() + dom.hi())) : dom.center();
  const double radius = dom.kind() == Domain::Kind::interval ? 0.5 * (dom.hi() - dom.lo()) : dom.radius();
  for (int probe = 0; probe < 3; ++probe) {
    const cplx lambda = center + radius * cplx(unit(rng), unit(rng));
    const Eigen::VectorXd sv = Eigen::BDCSVD<Eigen::MatrixXcd>(matpoly_eval(p, lambda)).singularValues();
    if (sv(0) > 0.0 && sv(sv.size() - 1) > opts.regularity_tol * sv(0)) return true;
  }
  return false;
}

namespace {

double right_residual(const Eigen::MatrixXcd& m, const Eigen::VectorXcd& v) { return (m * v).norm() / v.norm(); }

double left_residual(const Eigen::MatrixXcd& m, const Eigen::VectorXcd& w) {
  return (w.transpose() * m).norm() / w.norm();
}

// One step of inverse iteration; keeps the input when the step does not help.
Eigen::VectorXcd refine_vector(const Eigen::PartialPivLU<Eigen::MatrixXcd>& lu, const Eigen::MatrixXcd& m,
                               const Eigen::VectorXcd& v, bool transpose) {
  Eigen::VectorXcd x = transpose ? Eigen::VectorXcd(lu.transpose().solve(v)) : Eigen::VectorXcd(lu.solve(v));
  if (!x.allFinite() || x.norm() == 0.0) return v;
  x.normalize();
  const double before = transpose ? left_residual(m, v) : right_residual(m, v);
  const double after = transpose ? left_residual(m, x) : right_residual(m, x);
  return after <= before ? x : v;
}

}  // namespace

PolyEigResult polyeig(const MatrixPolynomial& p, const PolyEigOptions& opts) {
  if (p.degree() == 0) throw EigenSolverError("a constant matrix polynomial has no eigenvalues");
  if (!is_regular(p, opts)) {
    throw NonRegularError("matrix polynomial is not regular: det P(lambda) vanishes at every probe");
  }
  const Pencil pen = linearize(p);
  const GeneralizedEigen ge = generalized_eigen(pen.x, pen.y);
  const double pencil_norm = std::max(pen.x.norm(), pen.y.norm());
  const auto n = static_cast<Eigen::Index>(p.size());
  const auto k_deg = static_cast<Eigen::Index>(p.degree());

  PolyEigResult result;
  for (Eigen::Index i = 0; i < ge.alpha.size(); ++i) {
    const cplx a = ge.alpha(i);
    const cplx b = ge.beta(i);
    if (std::abs(b) < opts.infinite_tol_factor * kEps * pencil_norm) {
      result.infinite.emplace_back(a, b);
      continue;
    }
    Eigenpair pair;
    pair.lambda = a / b;

    const Eigen::VectorXcd vr = ge.right.col(i);
    Eigen::VectorXcd v = vr.segment(0, n);
    if (v.norm() < 1e-8 * vr.norm()) {
      Eigen::Index best = 0;
      for (Eigen::Index blk = 1; blk < k_deg; ++blk)
        if (vr.segment(blk * n, n).norm() > vr.segment(best * n, n).norm()) best = blk;
      v = vr.segment(best * n, n);
    }
    Eigen::VectorXcd w = ge.left.col(i).segment((k_deg - 1) * n, n).conjugate();
    v.normalize();
    w.normalize();

    const Eigen::MatrixXcd at = matpoly_eval(p, pair.lambda);
    if (opts.refine) {
      Eigen::PartialPivLU<Eigen::MatrixXcd> lu(at);
      v = refine_vector(lu, at, v, false);
      w = refine_vector(lu, at, w, true);
    }
    pair.right = v;
    pair.left = w;
    pair.residual_right = right_residual(at, v);
    pair.residual_left = left_residual(at, w);
    result.pairs.push_back(std::move(pair));
  }

  for (auto& pair : result.pairs) {
    double nearest = std::numeric_limits<double>::infinity();
    for (const auto& other : result.pairs) {
      if (&other == &pair) continue;
      nearest = std::min(nearest, std::abs(other.lambda - pair.lambda));
    }
    pair.simple = nearest > opts.simplicity_tol * std::max(1.0, std::abs(pair.lambda));
  }
  std::sort(result.pairs.begin(), result.pairs.end(), [](const Eigenpair& l, const Eigenpair& r) {
    if (l.lambda.real() != r.lambda.real()) return l.lambda.real() < r.lambda.real();
    return l.lambda.imag() < r.lambda.imag();
  });
  return result;
}

double eig_condition(const MatrixPolynomial& p, cplx lambda, const Eigen::VectorXcd& right,
                     const Eigen::VectorXcd& left) {
  const Eigen::MatrixXcd dp = matpoly_deriv_eval(p, lambda);
  const cplx rq = left.transpose() * dp * right;
  const double num = right.norm() * left.norm();
  if (std::abs(rq) <= 1e3 * kEps * num * spectral_norm(dp)) return std::numeric_limits<double>::infinity();
  return num / std::abs(rq);
}

double eig_condition(const MatrixPolynomial& p, const Eigenpair& pair) {
  return eig_condition(p, pair.lambda, pair.right, pair.left);
}

}  // namespace rlab
