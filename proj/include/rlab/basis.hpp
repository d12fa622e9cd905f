#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "rlab/common.hpp"

namespace rlab {

/// A degree-graded polynomial basis phi_0, phi_1, ... defined by
///
///   phi_0 = 1,  phi_1 = (alpha_0 x + beta_0),
///   phi_{k+1} = (alpha_k x + beta_k) phi_k + sum_{j=1}^{k} gamma_{k,j} phi_{j-1}.
///
/// Built-in bases generate their coefficients in closed form and never run
/// out of degree; custom bases carry explicit tables.
class DegreeGradedBasis {
 public:
  enum class Kind { monomial, chebyshev, legendre, custom };

  static DegreeGradedBasis monomial(Domain domain = Domain::interval(-1.0, 1.0));
  static DegreeGradedBasis chebyshev(Domain domain = Domain::interval(-1.0, 1.0));
  static DegreeGradedBasis legendre(Domain domain = Domain::interval(-1.0, 1.0));

  /// gamma[k-1][j-1] holds gamma_{k,j} for 1 <= j <= k. Throws InputError if
  /// any alpha_k is zero or a gamma row has the wrong length.
  static DegreeGradedBasis custom(std::vector<cplx> alpha, std::vector<cplx> beta,
                                  std::vector<std::vector<cplx>> gamma,
                                  Domain domain = Domain::interval(-1.0, 1.0));

  Kind kind() const { return kind_; }
  std::string_view name() const;
  const Domain& domain() const { return domain_; }
  DegreeGradedBasis with_domain(Domain domain) const;

  cplx alpha(std::size_t k) const;
  cplx beta(std::size_t k) const;
  /// gamma_{k,j}, 1 <= j <= k.
  cplx gamma(std::size_t k, std::size_t j) const;

  /// Largest n for which phi_0..phi_n are defined.
  std::size_t max_degree() const;

  /// True when gamma_{k,j} = 0 for every j < k (three-term recurrence).
  bool three_term() const { return three_term_; }

  friend bool operator==(const DegreeGradedBasis&, const DegreeGradedBasis&) = default;

 private:
  void require_degree(std::size_t n) const;

  Kind kind_ = Kind::monomial;
  Domain domain_;
  std::vector<cplx> alpha_;
  std::vector<cplx> beta_;
  std::vector<std::vector<cplx>> gamma_;
  bool three_term_ = true;
};

cplx basis_eval(const DegreeGradedBasis& basis, std::size_t k, cplx x);

/// phi_0(x), ..., phi_n(x) by forward recurrence.
std::vector<cplx> basis_eval_all(const DegreeGradedBasis& basis, std::size_t n, cplx x);

/// Clenshaw shifts b_1..b_{n+1} together with the reconstructed value.
struct ClenshawTrace {
  std::vector<cplx> shifts;  // shifts[k-1] = b_k, k = 1..n+1
  cplx value{};

  std::size_t degree() const { return shifts.size() - 1; }
  cplx shift(std::size_t k) const { return shifts.at(k - 1); }
};

enum class ClenshawPath { automatic, full };

/// Generalized Clenshaw recurrence for p = sum a_k phi_k. The automatic path
/// uses the O(n) three-term update when the basis allows it; the full path
/// always runs the O(n^2) sweep.
ClenshawTrace clenshaw_eval(const DegreeGradedBasis& basis, std::span<const cplx> coeffs, cplx x,
                            ClenshawPath path = ClenshawPath::automatic);

/// sum_{i<n} alpha_i b_{i+1}[p](y) phi_i(x): (p(x)-p(y))/(x-y), or p'(x) when x == y.
cplx divided_difference(const DegreeGradedBasis& basis, std::span<const cplx> coeffs, cplx x, cplx y);

cplx derivative_eval(const DegreeGradedBasis& basis, std::span<const cplx> coeffs, cplx x);

/// max_k | sup_{Omega} |phi_k| - 1 | over k <= n, sampled on `samples` points.
double normalization_defect(const DegreeGradedBasis& basis, std::size_t n, std::size_t samples = 2001);

}  // namespace rlab
