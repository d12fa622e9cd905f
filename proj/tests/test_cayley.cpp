#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "oracles.hpp"
#include "rlab/cayley.hpp"
#include "rlab/families.hpp"
#include "rlab/tensor.hpp"

using namespace rlab;

namespace {

MultiPoly monomial_1d_in_2d(std::size_t power_x1) {
  auto p = MultiPoly::zeros(DegreeGradedBasis::monomial(), {power_x1, 0});
  const std::size_t idx[] = {power_x1, 0};
  p(idx) = 1.0;
  return p;
}

MultiPoly random_poly(std::mt19937_64& rng, const DegreeGradedBasis& b, std::size_t d, std::size_t n) {
  std::size_t count = 1;
  for (std::size_t k = 0; k < d; ++k) count *= n + 1;
  return MultiPoly(b, std::vector<std::size_t>(d, n), oracle::random_coeffs(rng, count));
}

PolynomialSystem random_system(std::mt19937_64& rng, const DegreeGradedBasis& b, std::size_t d, std::size_t n) {
  std::vector<MultiPoly> polys;
  for (std::size_t k = 0; k < d; ++k) polys.push_back(random_poly(rng, b, d, n));
  return PolynomialSystem(polys);
}

std::vector<cplx> random_point(std::mt19937_64& rng, std::size_t d, double r = 1.0) {
  std::uniform_real_distribution<double> u(-r, r);
  std::vector<cplx> x(d);
  for (auto& c : x) c = u(rng);
  return x;
}

}  // namespace

TEST_CASE("cayley function of trivial systems") {
  const auto hv1 = hide_variable(PolynomialSystem({monomial_1d_in_2d(1), monomial_1d_in_2d(0)}));
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 5; ++trial) {
    const auto s = random_point(rng, 1), t = random_point(rng, 1);
    CHECK(std::abs(cayley_function_eval(hv1, s, t, 0.3) - cplx(1.0)) < 1e-14);
  }
  const auto hv2 = hide_variable(PolynomialSystem({monomial_1d_in_2d(2), monomial_1d_in_2d(0)}));
  const std::vector<cplx> s{0.4}, t{-0.9};
  CHECK(std::abs(cayley_function_eval(hv2, s, t, 0.1) - cplx(-0.5)) < 1e-14);
  CHECK_THROWS_AS(cayley_function_eval(hv2, s, s, 0.1), InputError);

  const auto tensor = cayley_coeffs(hv2, 0.1);
  REQUIRE(tensor.coeffs.size() == 4);
  CHECK(std::abs(tensor.coeffs[0]) < 1e-14);
  CHECK(std::abs(tensor.coeffs[1] - cplx(1.0)) < 1e-14);
  CHECK(std::abs(tensor.coeffs[2] - cplx(1.0)) < 1e-14);
  CHECK(std::abs(tensor.coeffs[3]) < 1e-14);
}

TEST_CASE("cayley taus and degenerate degree") {
  std::mt19937_64 rng(42);
  const auto hv = hide_variable(random_system(rng, DegreeGradedBasis::monomial(), 4, 3));
  CHECK(cayley_taus(hv) == std::vector<std::size_t>{2, 5, 8});
  const auto flat = hide_variable(PolynomialSystem({monomial_1d_in_2d(0), monomial_1d_in_2d(0)}));
  CHECK_THROWS_AS(cayley_taus(flat), ConstructionError);
}

TEST_CASE("unfolding is a bijection") {
  for (std::size_t d = 2; d <= 4; ++d) {
    for (std::size_t n = 1; n <= 3; ++n) {
      std::vector<std::size_t> taus;
      for (std::size_t k = 1; k < d; ++k) taus.push_back(k * n - 1);
      const CayleyUnfolding u(taus);
      std::vector<std::size_t> rext, cext;
      for (std::size_t k = 0; k + 1 < d; ++k) {
        rext.push_back(u.row_extent(k));
        cext.push_back(u.col_extent(k));
      }
      REQUIRE(tensor::element_count(rext) == u.size());
      REQUIRE(tensor::element_count(cext) == u.size());
      std::set<std::size_t> rows, cols;
      std::vector<std::size_t> i(d - 1, 0);
      do {
        const std::size_t r = u.row_index(i);
        rows.insert(r);
        CHECK(u.row_multi(r) == i);
      } while (tensor::next_index(i, rext));
      std::vector<std::size_t> j(d - 1, 0);
      do {
        const std::size_t c = u.col_index(j);
        cols.insert(c);
        CHECK(u.col_multi(c) == j);
      } while (tensor::next_index(j, cext));
      CHECK(rows.size() == u.size());
      CHECK(cols.size() == u.size());
      CHECK(*rows.rbegin() == u.size() - 1);
      CHECK(*cols.rbegin() == u.size() - 1);
      // First index fastest.
      CHECK(u.row_strides().front() == 1);
      CHECK(u.col_strides().front() == 1);
    }
  }
}

TEST_CASE("coefficient tensor reconstructs the cayley function") {
  std::mt19937_64 rng(43);
  {
    const auto hv = hide_variable(random_system(rng, DegreeGradedBasis::chebyshev(), 3, 2));
    for (int trial = 0; trial < 10; ++trial) {
      const auto s = random_point(rng, 2), t = random_point(rng, 2);
      const cplx h = random_point(rng, 1)[0];
      const auto tensor = cayley_coeffs(hv, h);
      const cplx direct = cayley_function_eval(hv, s, t, h);
      CHECK(std::abs(cayley_tensor_eval(tensor, s, t) - direct) <= 1e-10 * std::max(1.0, std::abs(direct)));
    }
  }
  {
    const auto hv = hide_variable(random_system(rng, DegreeGradedBasis::legendre(), 2, 3));
    const cplx h = 0.37;
    const auto tensor = cayley_coeffs(hv, h);
    int checked = 0;
    while (checked < 200) {
      const auto s = random_point(rng, 1), t = random_point(rng, 1);
      if (std::abs(s[0] - t[0]) < 1e-3) continue;
      const cplx direct = cayley_function_eval(hv, s, t, h);
      CHECK(std::abs(cayley_tensor_eval(tensor, s, t) - direct) <= 1e-9 * std::max(1.0, std::abs(direct)));
      ++checked;
    }
  }
}

TEST_CASE("linear systems give a 1x1 Cramer resultant") {
  Eigen::MatrixXd a(2, 2);
  a << 2.0, 0.0, 0.0, 3.0;
  const auto hv = hide_variable(linear_system(a, Eigen::Vector2d(-2.0, -3.0)));
  const auto res = cayley_resultant(hv);
  CHECK(res.matrix_poly.size() == 1);
  for (double x : {-0.7, 0.0, 1.0, 2.5}) CHECK(std::abs(matpoly_eval(res.matrix_poly, x)(0, 0) - cplx(-6.0 + 6.0 * x)) < 1e-12);

  std::mt19937_64 rng(44);
  for (std::size_t d = 2; d <= 4; ++d) {
    const Eigen::MatrixXd m = random_conditioned_matrix(d, 50.0, rng);
    const Eigen::VectorXd b = Eigen::VectorXd::Random(Eigen::Index(d));
    const auto hvd = hide_variable(linear_system(m, b));
    Eigen::MatrixXcd bm = m.cast<cplx>();
    bm.col(Eigen::Index(d - 1)) = b.cast<cplx>();
    const cplx det_b = oracle::leibniz_det(bm), det_a = oracle::leibniz_det(m.cast<cplx>());
    const auto tensor = cayley_coeffs(hvd, 0.25);
    const double tol = 1e-12 * (1.0 + std::abs(det_a) + std::abs(det_b));
    CHECK(std::abs(tensor.coeffs[0] - (det_b + 0.25 * det_a)) < tol);
    // Worst-case extents; only the constant term survives.
    for (std::size_t i = 1; i < tensor.coeffs.size(); ++i) CHECK(std::abs(tensor.coeffs[i]) < tol);
    const auto small = deflate(cayley_resultant(hvd));
    CHECK(small.matrix_poly.size() == 1);
  }
}

TEST_CASE("matvec with a Vandermonde vector interpolates f(s, t*)") {
  std::mt19937_64 rng(45);
  const auto b = DegreeGradedBasis::chebyshev();
  const auto hv = hide_variable(random_system(rng, b, 3, 2));
  const auto res = cayley_resultant(hv);
  const auto& u = res.unfolding;
  const auto t_star = random_point(rng, 2, 0.9);
  const cplx h = 0.61;

  Eigen::VectorXcd v(Eigen::Index(u.size()));
  for (std::size_t c = 0; c < u.size(); ++c) {
    const auto j = u.col_multi(c);
    cplx prod = 1.0;
    for (std::size_t k = 0; k < j.size(); ++k) prod *= oracle::phis(oracle::Family::chebyshev, j[k], t_star[k])[j[k]];
    v(Eigen::Index(c)) = prod;
  }
  const Eigen::VectorXcd lhs = matpoly_eval(res.matrix_poly, h) * v;

  std::vector<std::vector<cplx>> nodes;
  for (std::size_t k = 0; k < 2; ++k) nodes.push_back(Domain::interval(-1.0, 1.0).interior_nodes(u.row_extent(k)));
  std::vector<cplx> samples;
  for (const auto& s0 : nodes[0])
    for (const auto& s1 : nodes[1]) {
      const std::vector<cplx> s{s0, s1};
      samples.push_back(cayley_function_eval(hv, s, t_star, h));
    }
  const auto coeffs = interpolate_tensor(b, nodes, samples);
  for (std::size_t i0 = 0; i0 < u.row_extent(0); ++i0)
    for (std::size_t i1 = 0; i1 < u.row_extent(1); ++i1) {
      const std::size_t idx[] = {i0, i1};
      CHECK(std::abs(lhs(Eigen::Index(u.row_index(idx))) - coeffs[i0 * u.row_extent(1) + i1]) < 1e-9);
    }
}

TEST_CASE("diagonal derivative equals det J at roots") {
  Eigen::MatrixXd a(3, 3);
  a << 2.0, 1.0, 0.0, -1.0, 3.0, 0.5, 0.0, 1.0, 1.5;
  const Eigen::Vector3d b(0.3, -0.2, 0.1);
  const auto sys = linear_system(a, b);
  const Eigen::VectorXd root = a.lu().solve(-b);
  const std::vector<cplx> r{root(0), root(1), root(2)};
  const auto hv = hide_variable(sys);
  CHECK(std::abs(cayley_diagonal_derivative(hv, r) - cplx(a.determinant())) < 1e-8);

  const auto exc = hide_variable(example_c(2, 0.3, Eigen::MatrixXd::Identity(2, 2)));
  const std::vector<cplx> origin{0.0, 0.0};
  CHECK(std::abs(cayley_diagonal_derivative(exc, origin) - cplx(0.09)) < 1e-8);
  CHECK(std::abs(cayley_diagonal_value(exc, origin)) < 1e-14);

  std::mt19937_64 rng(46);
  for (int trial = 0; trial < 10; ++trial) {
    const auto planted = planted_random_system(2, 2, rng, DegreeGradedBasis::chebyshev());
    const auto hvp = hide_variable(planted.system);
    const cplx det_j = jacobian(planted.system, planted.root).determinant();
    CHECK(std::abs(cayley_diagonal_derivative(hvp, planted.root) - det_j) < 1e-6);
  }
}

TEST_CASE("structured eigenvectors") {
  const auto exc = hide_variable(example_c(2, 0.5, Eigen::MatrixXd::Identity(2, 2)));
  const auto res = cayley_resultant(exc);
  const std::vector<cplx> origin{0.0, 0.0};
  // Q = I makes R(0) vanish identically, so only the vector shapes are checked.
  const auto vw = cayley_structured_vectors(res, exc, origin);
  CHECK(std::abs(vw.right.norm() - 1.0) < 1e-15);
  CHECK(std::abs(vw.left.norm() - 1.0) < 1e-15);
  CHECK(vw.right(0) == cplx(1.0));
  CHECK(vw.left(0) == cplx(1.0));

  const auto pe = polyeig(deflate(res).matrix_poly);
  bool zero_found = false;
  for (const auto& pair : pe.pairs) zero_found = zero_found || std::abs(pair.lambda) < 1e-10;
  CHECK(zero_found);

  const auto rot = hide_variable(example_c(3, 0.5, random_orthogonal(3, 5)));
  const std::vector<cplx> origin3(3, 0.0);
  const auto vw3 = cayley_root_eigvectors(cayley_resultant(rot), rot, origin3, 1e-8);
  CHECK(std::abs(vw3.right.norm() - 1.0) < 1e-15);
  CHECK(std::abs(vw3.left.norm() - 1.0) < 1e-15);

  std::mt19937_64 rng(47);
  for (std::size_t d = 2; d <= 3; ++d) {
    for (int trial = 0; trial < 4; ++trial) {
      const auto planted = planted_random_system(d, 2, rng, DegreeGradedBasis::legendre());
      const auto hv = hide_variable(planted.system);
      const auto full = cayley_resultant(hv);
      const auto s = cayley_structured_vectors(full, hv, planted.root);
      CHECK(s.residual_right <= 1e-8);
      CHECK(s.residual_left <= 1e-8);
      const auto rx = matpoly_eval(full.matrix_poly, planted.root.back());
      const double scale = full.matrix_poly.scale();
      CHECK(std::abs(rx.determinant()) <= 1e-8 * std::pow(scale, double(rx.rows())));
    }
  }
}

TEST_CASE("deflation keeps the roots") {
  const auto q = random_orthogonal(3, 3);
  const auto hv = hide_variable(example_c(3, 0.5, q));
  const auto full = cayley_resultant(hv);
  const auto small = deflate(full);
  CHECK(small.deflated);
  CHECK(small.matrix_poly.size() <= full.matrix_poly.size());
  CHECK(small.unfolding.size() == small.matrix_poly.size());
  const auto pe = polyeig(small.matrix_poly);
  bool zero_found = false;
  for (const auto& pair : pe.pairs) zero_found = zero_found || std::abs(pair.lambda) < 1e-8;
  CHECK(zero_found);
}
