#include "rlab/basis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "rlab/log.hpp"

namespace rlab {

Domain Domain::interval(double lo, double hi) {
  if (!(lo < hi)) throw InputError("interval domain requires lo < hi");
  Domain d;
  d.kind_ = Kind::interval;
  d.lo_ = lo;
  d.hi_ = hi;
  return d;
}

Domain Domain::disc(cplx center, double radius) {
  if (!(radius > 0.0)) throw InputError("disc domain requires a positive radius");
  Domain d;
  d.kind_ = Kind::disc;
  d.center_ = center;
  d.radius_ = radius;
  return d;
}

bool Domain::contains(cplx z, double margin) const {
  if (kind_ == Kind::interval) {
    return std::abs(z.imag()) <= margin && z.real() >= lo_ - margin && z.real() <= hi_ + margin;
  }
  return std::abs(z - center_) <= radius_ + margin;
}

std::vector<cplx> Domain::nodes(std::size_t count) const {
  std::vector<cplx> out(count);
  if (count == 0) return out;
  if (kind_ == Kind::interval) {
    const double mid = 0.5 * (lo_ + hi_);
    const double half = 0.5 * (hi_ - lo_);
    if (count == 1) {
      out[0] = mid;
      return out;
    }
    for (std::size_t j = 0; j < count; ++j) {
      out[j] = mid + half * std::cos(std::numbers::pi * double(j) / double(count - 1));
    }
    return out;
  }
  for (std::size_t j = 0; j < count; ++j) {
    out[j] = center_ + radius_ * std::polar(1.0, 2.0 * std::numbers::pi * double(j) / double(count));
  }
  return out;
}

std::vector<cplx> Domain::interior_nodes(std::size_t count) const {
  std::vector<cplx> out(count);
  if (kind_ == Kind::interval) {
    const double mid = 0.5 * (lo_ + hi_);
    const double half = 0.5 * (hi_ - lo_);
    for (std::size_t j = 0; j < count; ++j) {
      out[j] = mid + half * std::cos(std::numbers::pi * (2.0 * double(j) + 1.0) / (2.0 * double(count)));
    }
    return out;
  }
  for (std::size_t j = 0; j < count; ++j) {
    out[j] = center_ + radius_ * std::polar(1.0, 2.0 * std::numbers::pi * (double(j) + 0.5) / double(count));
  }
  return out;
}

std::vector<cplx> Domain::sup_grid(std::size_t count) const {
  std::vector<cplx> out(count);
  if (count == 0) return out;
  if (kind_ == Kind::interval) {
    for (std::size_t j = 0; j < count; ++j) {
      const double t = count == 1 ? 0.5 : double(j) / double(count - 1);
      out[j] = lo_ + t * (hi_ - lo_);
    }
    return out;
  }
  for (std::size_t j = 0; j < count; ++j) {
    out[j] = center_ + radius_ * std::polar(1.0, 2.0 * std::numbers::pi * double(j) / double(count));
  }
  return out;
}

// ---------------------------------------------------------------------------

DegreeGradedBasis DegreeGradedBasis::monomial(Domain domain) {
  DegreeGradedBasis b;
  b.kind_ = Kind::monomial;
  b.domain_ = domain;
  return b;
}

DegreeGradedBasis DegreeGradedBasis::chebyshev(Domain domain) {
  DegreeGradedBasis b;
  b.kind_ = Kind::chebyshev;
  b.domain_ = domain;
  return b;
}

DegreeGradedBasis DegreeGradedBasis::legendre(Domain domain) {
  DegreeGradedBasis b;
  b.kind_ = Kind::legendre;
  b.domain_ = domain;
  return b;
}

DegreeGradedBasis DegreeGradedBasis::custom(std::vector<cplx> alpha, std::vector<cplx> beta,
                                            std::vector<std::vector<cplx>> gamma, Domain domain) {
  for (std::size_t k = 0; k < alpha.size(); ++k) {
    if (alpha[k] == cplx(0.0)) {
      throw InputError("alpha_" + std::to_string(k) + " is zero; basis would not be degree-graded");
    }
  }
  for (std::size_t k = 1; k <= gamma.size(); ++k) {
    if (gamma[k - 1].size() != k) {
      throw InputError("gamma row " + std::to_string(k) + " must have " + std::to_string(k) + " entries");
    }
  }
  DegreeGradedBasis b;
  b.kind_ = Kind::custom;
  b.domain_ = domain;
  b.alpha_ = std::move(alpha);
  b.beta_ = std::move(beta);
  b.gamma_ = std::move(gamma);
  b.three_term_ = true;
  for (std::size_t k = 1; k <= b.gamma_.size(); ++k) {
    for (std::size_t j = 1; j < k; ++j) {
      if (b.gamma_[k - 1][j - 1] != cplx(0.0)) b.three_term_ = false;
    }
  }
  // Residual scaling assumes sup |phi_k| = 1; a custom table is checked, not rescaled.
  const double defect = normalization_defect(b, std::min<std::size_t>(b.max_degree(), 30), 501);
  if (defect > 1e-10) {
    log_warn("custom basis is not sup-normalized on its domain (max | sup|phi_k| - 1 | = " + std::to_string(defect) +
             "); scaled residuals are relative to an unnormalized bound");
  }
  return b;
}

std::string_view DegreeGradedBasis::name() const {
  switch (kind_) {
    case Kind::monomial: return "monomial";
    case Kind::chebyshev: return "chebyshev";
    case Kind::legendre: return "legendre";
    case Kind::custom: return "custom";
  }
  return "custom";
}

DegreeGradedBasis DegreeGradedBasis::with_domain(Domain domain) const {
  DegreeGradedBasis b = *this;
  b.domain_ = domain;
  return b;
}

std::size_t DegreeGradedBasis::max_degree() const {
  if (kind_ != Kind::custom) return std::numeric_limits<std::size_t>::max();
  return std::min({alpha_.size(), beta_.size(), gamma_.size() + 1});
}

void DegreeGradedBasis::require_degree(std::size_t n) const {
  if (n > max_degree()) {
    throw DegreeOverflowError("basis recurrence tables support degree <= " + std::to_string(max_degree()) +
                              ", requested " + std::to_string(n));
  }
}

cplx DegreeGradedBasis::alpha(std::size_t k) const {
  switch (kind_) {
    case Kind::monomial: return 1.0;
    case Kind::chebyshev: return k == 0 ? 1.0 : 2.0;
    case Kind::legendre: return (2.0 * double(k) + 1.0) / (double(k) + 1.0);
    case Kind::custom: break;
  }
  require_degree(k + 1);
  return alpha_[k];
}

cplx DegreeGradedBasis::beta(std::size_t k) const {
  if (kind_ != Kind::custom) return 0.0;
  require_degree(k + 1);
  return beta_[k];
}

cplx DegreeGradedBasis::gamma(std::size_t k, std::size_t j) const {
  if (j < 1 || j > k) throw InputError("gamma_{k,j} requires 1 <= j <= k");
  switch (kind_) {
    case Kind::monomial: return 0.0;
    case Kind::chebyshev: return j == k ? -1.0 : 0.0;
    case Kind::legendre: return j == k ? -double(k) / (double(k) + 1.0) : 0.0;
    case Kind::custom: break;
  }
  require_degree(k + 1);
  return gamma_[k - 1][j - 1];
}

// ---------------------------------------------------------------------------

cplx basis_eval(const DegreeGradedBasis& basis, std::size_t k, cplx x) {
  return basis_eval_all(basis, k, x)[k];
}

std::vector<cplx> basis_eval_all(const DegreeGradedBasis& basis, std::size_t n, cplx x) {
  if (n > basis.max_degree()) {
    throw DegreeOverflowError("basis recurrence tables support degree <= " + std::to_string(basis.max_degree()) +
                              ", requested " + std::to_string(n));
  }
  std::vector<cplx> phi(n + 1);
  phi[0] = 1.0;
  if (n == 0) return phi;
  phi[1] = (basis.alpha(0) * x + basis.beta(0)) * phi[0];
  const bool banded = basis.three_term();
  for (std::size_t k = 1; k < n; ++k) {
    cplx next = (basis.alpha(k) * x + basis.beta(k)) * phi[k];
    if (banded) {
      next += basis.gamma(k, k) * phi[k - 1];
    } else {
      for (std::size_t j = 1; j <= k; ++j) next += basis.gamma(k, j) * phi[j - 1];
    }
    phi[k + 1] = next;
  }
  return phi;
}

ClenshawTrace clenshaw_eval(const DegreeGradedBasis& basis, std::span<const cplx> coeffs, cplx x,
                            ClenshawPath path) {
  if (coeffs.empty()) throw InputError("clenshaw_eval: empty coefficient list");
  const std::size_t n = coeffs.size() - 1;
  if (n > basis.max_degree()) {
    throw DegreeOverflowError("basis recurrence tables support degree <= " + std::to_string(basis.max_degree()) +
                              ", requested " + std::to_string(n));
  }
  ClenshawTrace trace;
  trace.shifts.assign(n + 1, cplx(0.0));
  auto& b = trace.shifts;  // b[k-1] = b_k
  const bool banded = path == ClenshawPath::automatic && basis.three_term();

  for (std::size_t k = n; k >= 1; --k) {
    cplx bk = coeffs[k];
    if (k < n) bk += (basis.alpha(k) * x + basis.beta(k)) * b[k];
    if (banded) {
      if (k + 1 <= n - 1) {
        const cplx g = basis.gamma(k + 1, k + 1);
        if (g != cplx(0.0)) bk += g * b[k + 1];
      }
    } else {
      for (std::size_t j = k + 1; j + 1 <= n; ++j) bk += basis.gamma(j, k + 1) * b[j];
    }
    b[k - 1] = bk;
  }

  cplx value = coeffs[0];
  if (n >= 1) {
    value += (basis.alpha(0) * x + basis.beta(0)) * b[0];
    if (banded) {
      if (n >= 2) {
        const cplx g = basis.gamma(1, 1);
        if (g != cplx(0.0)) value += g * b[1];
      }
    } else {
      for (std::size_t j = 1; j + 1 <= n; ++j) value += basis.gamma(j, 1) * b[j];
    }
  }
  trace.value = value;
  return trace;
}

cplx divided_difference(const DegreeGradedBasis& basis, std::span<const cplx> coeffs, cplx x, cplx y) {
  const ClenshawTrace trace = clenshaw_eval(basis, coeffs, y);
  const std::size_t n = trace.degree();
  if (n == 0) return 0.0;
  const std::vector<cplx> phi = basis_eval_all(basis, n - 1, x);
  cplx sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) sum += basis.alpha(i) * trace.shift(i + 1) * phi[i];
  return sum;
}

cplx derivative_eval(const DegreeGradedBasis& basis, std::span<const cplx> coeffs, cplx x) {
  return divided_difference(basis, coeffs, x, x);
}

double normalization_defect(const DegreeGradedBasis& basis, std::size_t n, std::size_t samples) {
  std::vector<double> sup(n + 1, 0.0);
  for (const cplx& x : basis.domain().sup_grid(samples)) {
    const auto phi = basis_eval_all(basis, n, x);
    for (std::size_t k = 0; k <= n; ++k) sup[k] = std::max(sup[k], std::abs(phi[k]));
  }
  double defect = 0.0;
  for (double s : sup) defect = std::max(defect, std::abs(s - 1.0));
  return defect;
}

}  // namespace rlab
