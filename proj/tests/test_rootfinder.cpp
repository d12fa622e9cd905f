#include <doctest.h>

#include <cmath>
#include <random>

#include "rlab/families.hpp"
#include "rlab/rootfinder.hpp"

using namespace rlab;

namespace {

PolynomialSystem circle_line(const DegreeGradedBasis& b = DegreeGradedBasis::monomial()) {
  const auto mono = DegreeGradedBasis::monomial();
  // p1 = x1^2 + x2^2 - 1, p2 = x1 - x2.
  MultiPoly p1(mono, {2, 2}, {-1.0, 0.0, 1.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0});
  MultiPoly p2(mono, {1, 1}, {0.0, -1.0, 1.0, 0.0});
  return PolynomialSystem({convert_basis(p1, b), convert_basis(p2, b)});
}

double max_dist(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace

TEST_CASE("circle and line") {
  const double r = std::sqrt(0.5);
  for (const auto& b : {DegreeGradedBasis::monomial(), DegreeGradedBasis::chebyshev(), DegreeGradedBasis::legendre()}) {
    for (Method m : {Method::cayley, Method::sylvester}) {
      SolveOptions opts;
      opts.method = m;
      const auto sys = circle_line(b);
      const auto roots = solve_system(sys, opts);
      std::size_t genuine = 0;
      for (const auto& rep : roots) {
        if (rep.spurious) continue;
        ++genuine;
        const std::vector<cplx> plus{r, r}, minus{-r, -r};
        CHECK(std::min(max_dist(rep.root, plus), max_dist(rep.root, minus)) < 1e-12);
        for (double res : rep.residuals) CHECK(res <= 1e-10);
      }
      CHECK(genuine == 2);
      CHECK(roots.size() <= max_solution_bound(sys));
    }
  }
}

TEST_CASE("example C root and conditioning") {
  const auto sys = example_c(2, 0.5, random_orthogonal(2, 7));
  const auto roots = solve_system(sys);
  bool found = false;
  for (const auto& rep : roots) {
    if (rep.spurious || max_dist(rep.root, {0.0, 0.0}) > 1e-10) continue;
    found = true;
    CHECK(std::abs(rep.jacobian_cond - 2.0) < 1e-12);
    CHECK(std::abs(rep.eig_cond - 4.0) < 0.05 * 4.0);
  }
  CHECK(found);
}

TEST_CASE("linear systems solve to the direct answer") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 5; ++trial) {
    const Eigen::MatrixXd a = random_conditioned_matrix(3, 20.0, rng);
    const Eigen::VectorXd x = Eigen::VectorXd::Random(3) * 0.5;
    const auto sys = linear_system(a, -a * x);
    const auto roots = solve_system(sys);
    REQUIRE(roots.size() == 1);
    for (int k = 0; k < 3; ++k) CHECK(std::abs(roots[0].root[std::size_t(k)] - cplx(x(k))) < 1e-10);
  }
}

TEST_CASE("component recovery") {
  const CayleyUnfolding u({1, 3});
  Eigen::VectorXcd v(Eigen::Index(u.size()));
  for (std::size_t c = 0; c < u.size(); ++c) {
    const auto j = u.col_multi(c);
    v(Eigen::Index(c)) = std::pow(0.3, double(j[0])) * std::pow(0.7, double(j[1]));
  }
  Eigenpair pair;
  pair.right = v;
  pair.left = Eigen::VectorXcd::Ones(Eigen::Index(u.size()));
  const auto got = recover_cayley_components(u, DegreeGradedBasis::monomial(), pair);
  REQUIRE(got.size() == 2);
  REQUIRE(got[0].has_value());
  REQUIRE(got[1].has_value());
  CHECK(std::abs(*got[0] - cplx(0.3)) < 1e-15);
  CHECK(std::abs(*got[1] - cplx(0.7)) < 1e-15);

  Eigenpair s;
  s.right = Eigen::VectorXcd::Zero(3);
  s.right(0) = 1.0;
  s.left = Eigen::VectorXcd::Ones(3);
  const auto x1 = recover_sylvester_components(DegreeGradedBasis::monomial(), s);
  REQUIRE(x1.size() == 1);
  REQUIRE(x1[0].has_value());
  CHECK(std::abs(*x1[0]) < 1e-15);

  std::mt19937_64 rng(62);
  std::uniform_real_distribution<double> ux(-0.9, 0.9), noise(-1.0, 1.0);
  const auto cheb = DegreeGradedBasis::chebyshev();
  for (int trial = 0; trial < 20; ++trial) {
    const double x = ux(rng);
    Eigen::VectorXcd w(6);
    for (int k = 0; k < 6; ++k) w(k) = basis_eval(cheb, std::size_t(k), x);
    for (int k = 0; k < 6; ++k) w(k) += 1e-8 * w.norm() * noise(rng);
    const auto p = vandermonde_point(cheb, w);
    REQUIRE(p.has_value());
    CHECK(std::abs(*p - cplx(x)) <= 1e-6);
  }
}

TEST_CASE("newton polish converges from a nearby start") {
  const auto sys = circle_line();
  const std::vector<cplx> start{0.7, 0.72};
  const auto res = newton_polish(sys, start);
  CHECK(res.converged);
  CHECK(std::abs(res.x[0] - cplx(std::sqrt(0.5))) < 1e-14);
  CHECK(scaled_residual(sys, res.x) < 1e-15);
}

TEST_CASE("condition sweeps reproduce closed forms") {
  const std::vector<double> sigmas{0.5, 0.2, 0.1};
  const auto exc2 = condition_sweep(
      [](double s) { return std::make_pair(example_c(2, s, random_orthogonal(2, 9)), std::vector<cplx>{0.0, 0.0}); },
      sigmas, Method::cayley);
  REQUIRE(exc2.size() == 3);
  for (const auto& row : exc2) {
    CHECK(std::abs(row.ratio - 1.0 / row.param) <= 1e-6 / row.param);
    CHECK(row.eig_cond >= 0.99 * std::pow(row.jacobian_cond, 2.0));
  }
  const std::vector<double> one{0.2};
  const auto exc3 = condition_sweep(
      [](double s) { return std::make_pair(example_c(3, s, random_orthogonal(3, 4)), std::vector<cplx>(3, 0.0)); }, one,
      Method::cayley);
  CHECK(std::abs(exc3[0].eig_cond - 125.0) < 1e-6 * 125.0);
  CHECK(exc3[0].eig_cond >= 0.99 * std::pow(exc3[0].jacobian_cond, 3.0));

  const double a = std::sqrt(0.5);
  const std::vector<double> s1{0.1};
  const auto exs = condition_sweep(
      [a](double s) { return std::make_pair(example_s(s, a, a), std::vector<cplx>{0.0, 0.0}); }, s1,
      Method::sylvester);
  CHECK(std::abs(exs[0].eig_cond - std::sqrt(1.01) / 0.01) < 1e-6 * 100.5);
  CHECK(std::abs(exs[0].rayleigh - cplx(0.01)) < 1e-10);
  CHECK(exs[0].eig_cond >= std::pow(exs[0].jacobian_cond, 2.0) * (1.0 - 1e-12));
}

TEST_CASE("cayley over sylvester ratio equals ||v||/||w||") {
  const double a = std::sqrt(0.5);
  for (double s : {0.5, 0.1}) {
    const auto sys = example_s(s, a, a);
    const std::vector<cplx> origin{0.0, 0.0};
    const auto kc = condition_at_root(sys, origin, Method::cayley, s);
    const auto ks = condition_at_root(sys, origin, Method::sylvester, s);
    const auto hv = hide_variable(sys);
    const auto vw = sylvester_structured_vectors(sylvester_resultant(hv), hv, origin);
    const double expect = vw.right.norm() / vw.left.norm();
    CHECK(std::abs(kc.eig_cond / ks.eig_cond - expect) <= 1e-4 * expect);
  }
}

TEST_CASE("reported roots satisfy the acceptance residual") {
  std::mt19937_64 rng(63);
  for (int trial = 0; trial < 6; ++trial) {
    const std::size_t d = 2 + trial % 2;
    const auto planted = planted_random_system(d, 2, rng, DegreeGradedBasis::chebyshev());
    SolveOptions opts;
    const auto roots = solve_system(planted.system, opts);
    CHECK(roots.size() <= max_solution_bound(planted.system));
    bool hit = false;
    for (const auto& rep : roots) {
      if (rep.spurious) continue;
      CHECK(scaled_residual(planted.system, rep.root) <= opts.tol_accept);
      hit = hit || max_dist(rep.root, planted.root) < 1e-8;
    }
    CHECK(hit);
  }
}

TEST_CASE("condition is consistent with its definition") {
  const auto sys = circle_line(DegreeGradedBasis::chebyshev());
  const auto hv = hide_variable(sys);
  const auto res = deflate(cayley_resultant(hv));
  const auto pe = polyeig(res.matrix_poly);
  for (const auto& pair : pe.pairs) {
    const double kappa = eig_condition(res.matrix_poly, pair);
    const cplx denom = pair.left.transpose() * matpoly_deriv_eval(res.matrix_poly, pair.lambda) * pair.right;
    CHECK(std::abs(kappa * std::abs(denom) - pair.right.norm() * pair.left.norm()) <=
          1e-10 * pair.right.norm() * pair.left.norm());
  }
}

TEST_CASE("method restrictions") {
  SolveOptions opts;
  opts.method = Method::sylvester;
  CHECK_THROWS_AS(solve_system(example_c(3, 0.5, Eigen::MatrixXd::Identity(3, 3)), opts), InputError);
  CHECK(method_name(Method::cayley) == "cayley");
  CHECK(recovery_name(Recovery::newton_polish) == "newton_polish");
}

TEST_CASE("known-roots corpus in orthogonal bases") {
  for (const auto& b : {DegreeGradedBasis::chebyshev(), DegreeGradedBasis::legendre()}) {
    for (Method m : {Method::cayley, Method::sylvester}) {
      SolveOptions opts;
      opts.method = m;
      for (const auto& entry : known_roots_corpus(17, b)) {
        const auto reports = solve_system(entry.system, opts);
        for (const auto& root : entry.roots) {
          bool found = false;
          for (const auto& rep : reports) found = found || (!rep.spurious && max_dist(rep.root, root) < 1e-8);
          CHECK_MESSAGE(found, entry.name);
        }
        for (const auto& rep : reports) {
          if (rep.spurious) continue;
          bool genuine = false;
          for (const auto& root : entry.roots) genuine = genuine || max_dist(rep.root, root) < 1e-6;
          CHECK_MESSAGE(genuine, entry.name);
        }
      }
    }
  }
}
