#pragma once

// Reference implementations that share no code with the library.

#include <cmath>
#include <complex>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using cplx = std::complex<double>;

enum class Family { monomial, chebyshev, legendre };

inline std::string family_name(Family f) {
  switch (f) {
    case Family::monomial: return "monomial";
    case Family::chebyshev: return "chebyshev";
    default: return "legendre";
  }
}

/// phi_0..phi_n(x) from the textbook recurrences.
inline std::vector<cplx> phis(Family f, std::size_t n, cplx x) {
  std::vector<cplx> p(n + 1);
  p[0] = 1.0;
  if (n == 0) return p;
  p[1] = x;
  for (std::size_t k = 1; k < n; ++k) {
    const double kk = double(k);
    switch (f) {
      case Family::monomial: p[k + 1] = x * p[k]; break;
      case Family::chebyshev: p[k + 1] = 2.0 * x * p[k] - p[k - 1]; break;
      case Family::legendre: p[k + 1] = ((2.0 * kk + 1.0) * x * p[k] - kk * p[k - 1]) / (kk + 1.0); break;
    }
  }
  return p;
}

/// phi_0'..phi_n'(x).
inline std::vector<cplx> dphis(Family f, std::size_t n, cplx x) {
  std::vector<cplx> d(n + 1, 0.0);
  const auto p = phis(f, n, x);
  for (std::size_t k = 1; k <= n; ++k) {
    const double kk = double(k);
    switch (f) {
      case Family::monomial: d[k] = kk * std::pow(x, int(k) - 1); break;
      case Family::chebyshev: {
        // T_k' = k U_{k-1}, U by its own recurrence.
        cplx u0 = 1.0, u1 = 2.0 * x;
        cplx u = k == 1 ? u0 : u1;
        for (std::size_t j = 2; j < k; ++j) {
          u = 2.0 * x * u1 - u0;
          u0 = u1;
          u1 = u;
        }
        d[k] = kk * u;
        break;
      }
      case Family::legendre:
        // P_{k}' = P_{k-2}' + (2k - 1) P_{k-1}.
        d[k] = (k >= 2 ? d[k - 2] : cplx(0.0)) + (2.0 * kk - 1.0) * p[k - 1];
        break;
    }
  }
  return d;
}

inline cplx naive_eval(Family f, const std::vector<cplx>& a, cplx x) {
  const auto p = phis(f, a.size() - 1, x);
  cplx s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * p[k];
  return s;
}

inline cplx naive_deriv(Family f, const std::vector<cplx>& a, cplx x) {
  const auto d = dphis(f, a.size() - 1, x);
  cplx s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * d[k];
  return s;
}

/// Tensor-product sum over a row-major coefficient array (last axis fastest).
inline cplx naive_multi_eval(Family f, const std::vector<std::size_t>& degrees, const std::vector<cplx>& coeffs,
                             const std::vector<cplx>& x) {
  const std::size_t d = degrees.size();
  std::vector<std::vector<cplx>> p;
  for (std::size_t k = 0; k < d; ++k) p.push_back(phis(f, degrees[k], x[k]));
  cplx sum = 0.0;
  for (std::size_t flat = 0; flat < coeffs.size(); ++flat) {
    std::size_t rest = flat;
    cplx w = 1.0;
    for (std::size_t k = d; k-- > 0;) {
      w *= p[k][rest % (degrees[k] + 1)];
      rest /= degrees[k] + 1;
    }
    sum += coeffs[flat] * w;
  }
  return sum;
}

/// Determinant by the Leibniz expansion (small matrices only).
inline cplx leibniz_det(const Eigen::MatrixXcd& m) {
  const int n = int(m.rows());
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  cplx total = 0.0;
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    cplx prod = 1.0;
    for (int i = 0; i < n; ++i) prod *= m(i, perm[i]);
    total += (inversions % 2 ? -1.0 : 1.0) * prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline std::vector<cplx> random_coeffs(std::mt19937_64& rng, std::size_t count) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<cplx> a(count);
  for (auto& c : a) c = u(rng);
  return a;
}

}  // namespace oracle
