#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "rlab/basis.hpp"

using namespace rlab;

namespace {

DegreeGradedBasis make(oracle::Family f) {
  switch (f) {
    case oracle::Family::monomial: return DegreeGradedBasis::monomial();
    case oracle::Family::chebyshev: return DegreeGradedBasis::chebyshev();
    default: return DegreeGradedBasis::legendre();
  }
}

constexpr oracle::Family kFamilies[] = {oracle::Family::monomial, oracle::Family::chebyshev,
                                        oracle::Family::legendre};

double l1(const std::vector<cplx>& a) {
  double s = 0.0;
  for (const auto& c : a) s += std::abs(c);
  return s;
}

std::vector<cplx> unit(std::size_t k) {
  std::vector<cplx> e(k + 1, 0.0);
  e[k] = 1.0;
  return e;
}

}  // namespace

TEST_CASE("basis_eval small values") {
  CHECK(std::abs(basis_eval(DegreeGradedBasis::chebyshev(), 2, 0.5) - cplx(-0.5)) < 1e-15);
  for (auto f : kFamilies) CHECK(basis_eval(make(f), 0, 7.3) == cplx(1.0));
  CHECK(std::abs(basis_eval(DegreeGradedBasis::monomial(), 5, 2.0) - cplx(32.0)) < 1e-13);
}

TEST_CASE("built-in recurrence coefficients") {
  const auto c = DegreeGradedBasis::chebyshev();
  CHECK(c.alpha(0) == cplx(1.0));
  CHECK(c.alpha(3) == cplx(2.0));
  CHECK(c.gamma(3, 3) == cplx(-1.0));
  CHECK(c.gamma(3, 2) == cplx(0.0));
  const auto l = DegreeGradedBasis::legendre();
  CHECK(std::abs(l.alpha(2) - cplx(5.0 / 3.0)) < 1e-15);
  CHECK(std::abs(l.gamma(2, 2) - cplx(-2.0 / 3.0)) < 1e-15);
  CHECK(c.three_term());
}

TEST_CASE("custom basis validation and degree overflow") {
  CHECK_THROWS_AS(DegreeGradedBasis::custom({1.0, 0.0}, {0.0, 0.0}, {{0.0}}), InputError);
  CHECK_THROWS_AS(DegreeGradedBasis::custom({1.0, 1.0}, {0.0, 0.0}, {{0.0, 0.0}}), InputError);
  // Chebyshev written out by hand up to degree 3.
  const auto b = DegreeGradedBasis::custom({1.0, 2.0, 2.0}, {0.0, 0.0, 0.0}, {{-1.0}, {0.0, -1.0}});
  CHECK(b.max_degree() == 3);
  CHECK(std::abs(basis_eval(b, 3, 0.4) - cplx(4 * 0.064 - 3 * 0.4)) < 1e-15);
  CHECK_THROWS_AS(basis_eval(b, 4, 0.4), DegreeOverflowError);
  const std::vector<cplx> coeffs(5, 1.0);
  CHECK_THROWS_AS(clenshaw_eval(b, coeffs, 0.1), DegreeOverflowError);
}

TEST_CASE("clenshaw examples") {
  const std::vector<cplx> a{1.0, 2.0, 3.0};
  CHECK(std::abs(clenshaw_eval(DegreeGradedBasis::chebyshev(), a, 0.5).value - cplx(0.5)) < 1e-15);
  for (auto f : kFamilies) {
    const std::vector<cplx> c{cplx(2.5, -1.0)};
    CHECK(clenshaw_eval(make(f), c, 0.77).value == c[0]);
  }
  CHECK_THROWS_AS(clenshaw_eval(DegreeGradedBasis::chebyshev(), std::vector<cplx>{}, 0.0), InputError);
}

TEST_CASE("monomial shifts are Horner intermediates bitwise") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = oracle::random_coeffs(rng, 1 + trial % 12);
    const cplx x(0.3 - 0.05 * trial, 0.1 * (trial % 3));
    const auto tr = clenshaw_eval(DegreeGradedBasis::monomial(), a, x);
    const std::size_t n = a.size() - 1;
    CHECK(tr.shift(n + 1) == cplx(0.0));
    if (n == 0) continue;
    cplx h = a[n];
    CHECK(tr.shift(n) == h);
    for (std::size_t k = n - 1; k >= 1; --k) {
      h = a[k] + x * h;
      CHECK(tr.shift(k) == h);
    }
    CHECK(tr.value == a[0] + x * h);
  }
}

TEST_CASE("clenshaw agrees with naive summation") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> ux(-1.0, 1.0);
  for (auto f : kFamilies) {
    for (int trial = 0; trial < 50; ++trial) {
      const auto a = oracle::random_coeffs(rng, 1 + rng() % 31);
      const cplx x = ux(rng);
      const cplx got = clenshaw_eval(make(f), a, x).value;
      CHECK(std::abs(got - oracle::naive_eval(f, a, x)) <= 1e-12 * l1(a));
    }
  }
}

TEST_CASE("banded and full clenshaw paths agree") {
  std::mt19937_64 rng(6);
  for (auto f : {oracle::Family::chebyshev, oracle::Family::legendre}) {
    for (int trial = 0; trial < 30; ++trial) {
      const auto a = oracle::random_coeffs(rng, 2 + rng() % 25);
      const cplx x(0.9 * std::cos(trial), 0.2 * std::sin(trial));
      const auto fast = clenshaw_eval(make(f), a, x, ClenshawPath::automatic);
      const auto full = clenshaw_eval(make(f), a, x, ClenshawPath::full);
      const double scale = std::max(1.0, std::abs(full.value));
      CHECK(std::abs(fast.value - full.value) <= 1e-13 * scale);
      for (std::size_t k = 1; k <= full.degree(); ++k)
        CHECK(std::abs(fast.shift(k) - full.shift(k)) <= 1e-13 * std::max(1.0, std::abs(full.shift(k))));
    }
  }
}

TEST_CASE("divided difference") {
  const auto mono = DegreeGradedBasis::monomial();
  const std::vector<cplx> sq{0.0, 0.0, 1.0};
  CHECK(std::abs(divided_difference(mono, sq, 0.3, -0.6) - cplx(-0.3)) < 1e-15);

  const auto cheb = DegreeGradedBasis::chebyshev();
  const auto t3 = unit(3);
  const cplx expect = (oracle::phis(oracle::Family::chebyshev, 3, 0.7)[3] -
                       oracle::phis(oracle::Family::chebyshev, 3, 0.2)[3]) / 0.5;
  CHECK(std::abs(divided_difference(cheb, t3, 0.7, 0.2) - expect) < 1e-14);

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> ux(-1.0, 1.0);
  for (auto f : kFamilies) {
    for (int trial = 0; trial < 40; ++trial) {
      const auto a = oracle::random_coeffs(rng, 1 + rng() % 20);
      const cplx x = ux(rng), y = ux(rng);
      if (std::abs(x - y) < 1e-3) continue;
      const cplx px = oracle::naive_eval(f, a, x), py = oracle::naive_eval(f, a, y);
      const double tol = 1e-10 * (1.0 + std::abs(px) + std::abs(py)) / std::abs(x - y);
      CHECK(std::abs(divided_difference(make(f), a, x, y) - (px - py) / (x - y)) <= tol);
    }
    // x == y gives the derivative (central-difference check).
    const auto a = oracle::random_coeffs(rng, 8);
    const cplx z = 0.35, h = 1e-6;
    const cplx fd = (clenshaw_eval(make(f), a, z + h).value - clenshaw_eval(make(f), a, z - h).value) / (2.0 * h);
    CHECK(std::abs(divided_difference(make(f), a, z, z) - fd) < 1e-6);
  }
}

TEST_CASE("derivative examples and oracle") {
  CHECK(std::abs(derivative_eval(DegreeGradedBasis::monomial(), unit(3), 2.0) - cplx(12.0)) < 1e-13);
  CHECK(std::abs(derivative_eval(DegreeGradedBasis::chebyshev(), unit(2), 0.3) - cplx(1.2)) < 1e-14);
  CHECK(derivative_eval(DegreeGradedBasis::legendre(), std::vector<cplx>{4.0}, 0.1) == cplx(0.0));

  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> ux(-1.0, 1.0);
  for (auto f : kFamilies) {
    for (int trial = 0; trial < 30; ++trial) {
      const auto a = oracle::random_coeffs(rng, 1 + rng() % 20);
      const cplx x = ux(rng);
      double scale = 1.0;
      for (std::size_t k = 0; k < a.size(); ++k) scale += double(k * k) * std::abs(a[k]);
      CHECK(std::abs(derivative_eval(make(f), a, x) - oracle::naive_deriv(f, a, x)) <= 1e-12 * scale);
    }
  }
}

TEST_CASE("shift recurrence for basis functions") {
  for (auto f : kFamilies) {
    const auto b = make(f);
    const cplx x(0.41, 0.0);
    for (std::size_t n = 1; n <= 15; ++n) {
      const auto next = clenshaw_eval(b, unit(n + 1), x);
      const auto cur = clenshaw_eval(b, unit(n), x);
      for (std::size_t j = 1; j <= n; ++j) {
        cplx rhs = (b.alpha(n) * x + b.beta(n)) * cur.shift(j);
        double mag = std::abs(rhs);
        for (std::size_t s = j + 1; s <= n; ++s) {
          const cplx term = b.gamma(n, s) * clenshaw_eval(b, unit(s - 1), x).shift(j);
          rhs += term;
          mag += std::abs(term);
        }
        CHECK(std::abs(next.shift(j) - rhs) <= 1e-11 * std::max(1.0, mag));
      }
    }
  }
}

TEST_CASE("shifts are linear in the coefficients") {
  std::mt19937_64 rng(9);
  const auto b = DegreeGradedBasis::legendre();
  const auto p = oracle::random_coeffs(rng, 10), q = oracle::random_coeffs(rng, 10);
  const cplx c1(0.7, 0.2), c2(-1.3, 0.0), x(0.25, -0.1);
  std::vector<cplx> r(10);
  for (int i = 0; i < 10; ++i) r[i] = c1 * p[i] + c2 * q[i];
  const auto tp = clenshaw_eval(b, p, x), tq = clenshaw_eval(b, q, x), tr = clenshaw_eval(b, r, x);
  for (std::size_t k = 1; k <= 10; ++k)
    CHECK(std::abs(tr.shift(k) - (c1 * tp.shift(k) + c2 * tq.shift(k))) < 1e-14);
}

TEST_CASE("built-in bases are sup-normalized") {
  for (auto f : kFamilies) CHECK(normalization_defect(make(f), 30) <= 1e-10);
}

TEST_CASE("custom basis reproduces chebyshev with shifted domain") {
  const auto mono = DegreeGradedBasis::monomial(Domain::interval(0.0, 2.0));
  CHECK(mono.domain().lo() == 0.0);
  CHECK(std::abs(basis_eval(mono, 3, 1.5) - cplx(3.375)) < 1e-14);
}
