#include "rlab/families.hpp"

#include <algorithm>
#include <cmath>

#include "rlab/tensor.hpp"

namespace rlab {

namespace {

Eigen::MatrixXd haar_orthogonal(std::size_t d, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXd g(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  for (Eigen::Index j = 0; j < g.cols(); ++j)
    for (Eigen::Index i = 0; i < g.rows(); ++i) g(i, j) = normal(rng);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
  Eigen::MatrixXd q = qr.householderQ();
  const Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < q.cols(); ++j)
    if (r(j, j) < 0.0) q.col(j) *= -1.0;
  return q;
}

// Monomial coefficient tensor with uniform degree, filled by (multi-index -> value) entries.
MultiPoly monomial_poly(std::size_t d, std::size_t degree,
                        const std::vector<std::pair<std::vector<std::size_t>, double>>& terms) {
  MultiPoly p = MultiPoly::zeros(DegreeGradedBasis::monomial(), std::vector<std::size_t>(d, degree));
  for (const auto& [idx, value] : terms) p(idx) += value;
  return p;
}

std::vector<std::size_t> unit_index(std::size_t d, std::size_t k, std::size_t power) {
  std::vector<std::size_t> idx(d, 0);
  idx[k] = power;
  return idx;
}

PolynomialSystem in_basis(std::vector<MultiPoly> monomial_polys, const DegreeGradedBasis& basis) {
  std::vector<MultiPoly> out;
  for (auto& p : monomial_polys) {
    const MultiPoly on_domain(DegreeGradedBasis::monomial(basis.domain()), p.degrees(),
                              std::vector<cplx>(p.coeffs().begin(), p.coeffs().end()));
    out.push_back(convert_basis(on_domain, basis));
  }
  return PolynomialSystem(std::move(out));
}

}  // namespace

MultiPoly from_function(const DegreeGradedBasis& basis, std::vector<std::size_t> degrees,
                        const std::function<cplx(std::span<const cplx>)>& f) {
  const std::size_t d = degrees.size();
  std::vector<std::vector<cplx>> nodes;
  std::vector<std::size_t> ext;
  for (std::size_t n : degrees) {
    nodes.push_back(interpolation_nodes(basis.domain(), n));
    ext.push_back(n + 1);
  }
  std::vector<cplx> samples;
  std::vector<std::size_t> idx(d, 0);
  std::vector<cplx> point(d);
  do {
    for (std::size_t k = 0; k < d; ++k) point[k] = nodes[k][idx[k]];
    samples.push_back(f(point));
  } while (tensor::next_index(idx, ext));
  MultiPoly p = mp_interpolate(basis, d, std::move(degrees), samples);
  // Coefficients at roundoff level relative to the largest are exact zeros.
  const double cut = 64.0 * kEps * p.coeff_max();
  for (cplx& c : p.coeffs()) {
    if (std::abs(c.real()) <= cut) c.real(0.0);
    if (std::abs(c.imag()) <= cut) c.imag(0.0);
  }
  return p;
}

Eigen::MatrixXd random_orthogonal(std::size_t d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return haar_orthogonal(d, rng);
}

PolynomialSystem example_c(std::size_t d, double sigma, const Eigen::MatrixXd& q, const DegreeGradedBasis& basis) {
  if (q.rows() != static_cast<Eigen::Index>(d) || q.cols() != static_cast<Eigen::Index>(d)) throw InputError("example_c: Q must be d x d");
  std::vector<MultiPoly> polys;
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<std::pair<std::vector<std::size_t>, double>> terms{{unit_index(d, i, 2), 1.0}};
    for (std::size_t j = 0; j < d; ++j) terms.push_back({unit_index(d, j, 1), sigma * q(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j))});
    polys.push_back(monomial_poly(d, 2, terms));
  }
  return in_basis(std::move(polys), basis);
}

PolynomialSystem example_s(double sigma, double alpha, double beta, const DegreeGradedBasis& basis) {
  std::vector<MultiPoly> polys;
  polys.push_back(monomial_poly(2, 2, {{{2, 0}, 1.0}, {{1, 0}, sigma * alpha}, {{0, 1}, sigma * beta}}));
  polys.push_back(monomial_poly(2, 2, {{{0, 2}, 1.0}, {{1, 0}, -sigma * beta}, {{0, 1}, sigma * alpha}}));
  return in_basis(std::move(polys), basis);
}

PolynomialSystem relcond_system(std::size_t d, double u, const DegreeGradedBasis& basis) {
  if (d < 2) throw InputError("relcond_system: d >= 2 required");
  const double c = std::sqrt(2.0) / 2.0;
  std::vector<MultiPoly> polys;
  for (std::size_t i = 0; i + 1 < d; i += 2) {
    polys.push_back(monomial_poly(d, 2, {{unit_index(d, i, 2), 1.0}, {unit_index(d, i, 1), u * c},
                                         {unit_index(d, i + 1, 1), u * c}}));
    polys.push_back(monomial_poly(d, 2, {{unit_index(d, i + 1, 2), 1.0}, {unit_index(d, i + 1, 1), u * c},
                                         {unit_index(d, i, 1), -u * c}}));
  }
  if (d % 2 == 1) polys.push_back(monomial_poly(d, 2, {{unit_index(d, d - 1, 2), 1.0}, {unit_index(d, d - 1, 1), u}}));
  return in_basis(std::move(polys), basis);
}

PolynomialSystem linear_system(const Eigen::MatrixXd& a, const Eigen::VectorXd& b, const DegreeGradedBasis& basis) {
  const std::size_t d = std::size_t(a.rows());
  if (a.cols() != a.rows() || b.size() != a.rows()) throw InputError("linear_system: A must be square and match b");
  std::vector<MultiPoly> polys;
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<std::pair<std::vector<std::size_t>, double>> terms{{std::vector<std::size_t>(d, 0), b(static_cast<Eigen::Index>(i))}};
    for (std::size_t j = 0; j < d; ++j) terms.push_back({unit_index(d, j, 1), a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j))});
    polys.push_back(monomial_poly(d, 1, terms));
  }
  return in_basis(std::move(polys), basis);
}

Eigen::MatrixXd random_conditioned_matrix(std::size_t d, double max_cond, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double cond = std::exp(unit(rng) * std::log(max_cond));
  Eigen::VectorXd sv(static_cast<Eigen::Index>(d));
  for (std::size_t k = 0; k < d; ++k) {
    const double t = d == 1 ? 0.0 : double(k) / double(d - 1);
    sv(static_cast<Eigen::Index>(k)) = std::pow(cond, -t);
  }
  const Eigen::MatrixXd u = haar_orthogonal(d, rng);
  const Eigen::MatrixXd v = haar_orthogonal(d, rng);
  return u * sv.asDiagonal() * v.transpose();
}

PlantedSystem planted_random_system(std::size_t d, std::size_t n, std::mt19937_64& rng,
                                    const DegreeGradedBasis& basis) {
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  std::uniform_real_distribution<double> where(-0.8, 0.8);
  std::vector<cplx> root(d);
  for (auto& x : root) x = where(rng);
  std::vector<MultiPoly> polys;
  for (std::size_t i = 0; i < d; ++i) {
    MultiPoly p = MultiPoly::zeros(basis, std::vector<std::size_t>(d, n));
    for (cplx& c : p.coeffs()) c = coeff(rng);
    p.coeffs()[0] -= mp_eval(p, root);
    polys.push_back(std::move(p));
  }
  return PlantedSystem{PolynomialSystem(std::move(polys)), std::move(root)};
}

std::vector<KnownRootsSystem> known_roots_corpus(std::uint64_t seed, const DegreeGradedBasis& basis) {
  std::vector<KnownRootsSystem> corpus;
  {
    const double h = std::sqrt(2.0) / 2.0;
    auto circle = from_function(basis, {2, 2}, [](std::span<const cplx> x) { return x[0] * x[0] + x[1] * x[1] - 1.0; });
    auto line = from_function(basis, {1, 1}, [](std::span<const cplx> x) { return x[0] - x[1]; });
    corpus.push_back({"circle-line", PolynomialSystem({circle, line}), {{-h, -h}, {h, h}}});
  }

  // Products of shifted linear forms in rotated coordinates y = G x.
  const std::vector<std::pair<std::size_t, std::size_t>> shapes{{1, 1}, {1, 2}, {2, 1}, {2, 2}, {2, 3},
                                                                 {3, 2}, {3, 3}, {1, 3}, {3, 1}};
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.2, 1.3);
  std::uniform_real_distribution<double> level(-0.5, 0.5);
  auto spread = [&](std::size_t count) {
    std::vector<double> v;
    while (v.size() < count) {
      const double z = level(rng);
      if (std::all_of(v.begin(), v.end(), [z](double w) { return std::abs(w - z) > 0.15; })) v.push_back(z);
    }
    return v;
  };
  for (const auto& [n1, n2] : shapes) {
    for (;;) {
      const double th = angle(rng);
      const double c = std::cos(th), s = std::sin(th);
      const auto a = spread(n1);
      const auto b = spread(n2);
      std::vector<std::vector<cplx>> roots;
      for (double ai : a)
        for (double bj : b) roots.push_back({c * ai - s * bj, s * ai + c * bj});
      bool separated = true;
      for (std::size_t i = 0; i < roots.size(); ++i)
        for (std::size_t j = i + 1; j < roots.size(); ++j)
          if (std::abs(roots[i][1] - roots[j][1]) < 0.05) separated = false;
      if (!separated) continue;

      auto p1 = from_function(basis, {n1, n1}, [=](std::span<const cplx> x) {
        cplx v = 1.0;
        for (double ai : a) v *= c * x[0] + s * x[1] - ai;
        return v;
      });
      auto p2 = from_function(basis, {n2, n2}, [=](std::span<const cplx> x) {
        cplx v = 1.0;
        for (double bj : b) v *= -s * x[0] + c * x[1] - bj;
        return v;
      });
      corpus.push_back({"product-" + std::to_string(n1) + "x" + std::to_string(n2),
                        PolynomialSystem({p1, p2}), std::move(roots)});
      break;
    }
  }
  return corpus;
}

}  // namespace rlab
