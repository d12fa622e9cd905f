#include "rlab/rootfinder.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rlab/log.hpp"

namespace rlab {

std::string_view method_name(Method m) { return m == Method::cayley ? "cayley" : "sylvester"; }

std::string_view recovery_name(Recovery r) { return r == Recovery::eigenvector ? "eigenvector" : "newton_polish"; }

double scaled_residual(const PolynomialSystem& sys, std::span<const cplx> x) {
  const auto values = system_eval(sys, x);
  double worst = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double scale = sys[i].coeff_l1();
    worst = std::max(worst, scale > 0.0 ? std::abs(values[i]) / scale : std::abs(values[i]));
  }
  return worst;
}

namespace {

Eigen::VectorXcd to_vector(std::span<const cplx> x) {
  return Eigen::Map<const Eigen::VectorXcd>(x.data(), static_cast<Eigen::Index>(x.size()));
}

Eigen::VectorXcd solve_step(const Eigen::MatrixXcd& jac, const Eigen::VectorXcd& rhs) {
  if (jac.rows() == jac.cols()) {
    Eigen::PartialPivLU<Eigen::MatrixXcd> lu(jac);
    if (lu.rcond() > 10.0 * kEps) return lu.solve(rhs);
  }
  return jac.completeOrthogonalDecomposition().solve(rhs);
}

double max_norm_distance(std::span<const cplx> a, std::span<const cplx> b) {
  double dist = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) dist = std::max(dist, std::abs(a[k] - b[k]));
  return dist;
}

// Gauss-Newton on all d equations over the listed unknown components only.
std::vector<cplx> partial_newton(const PolynomialSystem& sys, std::vector<cplx> x,
                                 const std::vector<std::size_t>& unknown, std::size_t max_iter) {
  std::vector<cplx> best = x;
  double best_res = scaled_residual(sys, x);
  for (std::size_t it = 0; it < max_iter; ++it) {
    const Eigen::MatrixXcd jac = jacobian(sys, x);
    Eigen::MatrixXcd sub(jac.rows(), static_cast<Eigen::Index>(unknown.size()));
    for (std::size_t k = 0; k < unknown.size(); ++k) sub.col(static_cast<Eigen::Index>(k)) = jac.col(static_cast<Eigen::Index>(unknown[k]));
    const auto f = system_eval(sys, x);
    const Eigen::VectorXcd step = sub.completeOrthogonalDecomposition().solve(to_vector(f));
    if (!step.allFinite()) break;
    for (std::size_t k = 0; k < unknown.size(); ++k) x[unknown[k]] -= step(static_cast<Eigen::Index>(k));
    const double res = scaled_residual(sys, x);
    if (res < best_res) {
      best_res = res;
      best = x;
    }
    if (step.norm() <= 1e-14 * std::max(1.0, to_vector(x).norm())) break;
  }
  return best;
}

std::vector<cplx> fill_from_grid(const PolynomialSystem& sys, std::vector<cplx> x,
                                 const std::vector<std::size_t>& unknown, std::size_t max_iter) {
  const auto starts = sys.domain().nodes(5);
  std::vector<std::size_t> ext(unknown.size(), starts.size());
  std::vector<std::size_t> idx(unknown.size(), 0);
  std::vector<cplx> best = x;
  double best_res = std::numeric_limits<double>::infinity();
  for (;;) {
    for (std::size_t k = 0; k < unknown.size(); ++k) x[unknown[k]] = starts[idx[k]];
    auto cand = partial_newton(sys, x, unknown, max_iter);
    const double res = scaled_residual(sys, cand);
    if (res < best_res) {
      best_res = res;
      best = std::move(cand);
    }
    std::size_t k = 0;
    while (k < idx.size() && ++idx[k] == ext[k]) idx[k++] = 0;
    if (k == idx.size()) break;
  }
  return best;
}

// Dominant mode-k factor of a vector viewed as a tensor with the given extents (first index fastest).
Eigen::VectorXcd mode_factor(const Eigen::VectorXcd& vec, const std::vector<std::size_t>& ext, std::size_t k) {
  std::size_t inner = 1;
  for (std::size_t a = 0; a < k; ++a) inner *= ext[a];
  const std::size_t n_k = ext[k];
  const std::size_t outer = std::size_t(vec.size()) / (inner * n_k);
  Eigen::MatrixXcd unf(static_cast<Eigen::Index>(n_k), static_cast<Eigen::Index>(inner * outer));
  for (std::size_t o = 0; o < outer; ++o)
    for (std::size_t a = 0; a < n_k; ++a)
      for (std::size_t i = 0; i < inner; ++i)
        unf(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(o * inner + i)) = vec(static_cast<Eigen::Index>((o * n_k + a) * inner + i));
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(unf, Eigen::ComputeThinU);
  return svd.matrixU().col(0);
}

}  // namespace

NewtonResult newton_polish(const PolynomialSystem& sys, std::span<const cplx> start, std::size_t max_iter,
                           double step_tol) {
  NewtonResult out;
  std::vector<cplx> x(start.begin(), start.end());
  out.x = x;
  double best_res = scaled_residual(sys, x);
  for (std::size_t it = 0; it < max_iter; ++it) {
    const auto f = system_eval(sys, x);
    const Eigen::VectorXcd step = solve_step(jacobian(sys, x), to_vector(f));
    if (!step.allFinite()) break;
    for (std::size_t k = 0; k < x.size(); ++k) x[k] -= step(static_cast<Eigen::Index>(k));
    out.iterations = it + 1;
    const double res = scaled_residual(sys, x);
    if (res <= best_res) {
      best_res = res;
      out.x = x;
    }
    if (step.norm() <= step_tol * std::max(1.0, to_vector(x).norm())) {
      out.converged = true;
      break;
    }
  }
  return out;
}

std::optional<cplx> vandermonde_point(const DegreeGradedBasis& basis, const Eigen::VectorXcd& v) {
  if (v.size() < 2 || !v.allFinite() || v.norm() == 0.0) return std::nullopt;
  if (std::abs(v(0)) >= 1e-8 * v.norm()) return (v(1) / v(0) - basis.beta(0)) / basis.alpha(0);

  // Best-aligned Vandermonde vector over a sample of the domain.
  const Domain& dom = basis.domain();
  std::vector<cplx> candidates;
  if (dom.kind() == Domain::Kind::interval) {
    for (int i = 0; i <= 800; ++i) candidates.push_back(dom.lo() + (dom.hi() - dom.lo()) * i / 800.0);
  } else {
    for (int ring = 0; ring <= 10; ++ring)
      for (int j = 0; j < 64; ++j)
        candidates.push_back(dom.center() + dom.radius() * ring / 10.0 * std::polar(1.0, 2.0 * M_PI * j / 64.0));
  }
  const Eigen::VectorXcd u = v.normalized();
  double best = -1.0;
  cplx arg{};
  for (const cplx x : candidates) {
    const auto phi = basis_eval_all(basis, std::size_t(v.size()) - 1, x);
    const Eigen::Map<const Eigen::VectorXcd> p(phi.data(), v.size());
    const double score = std::abs(p.dot(u)) / p.norm();
    if (score > best) {
      best = score;
      arg = x;
    }
  }
  return arg;
}

std::vector<std::optional<cplx>> recover_cayley_components(const CayleyUnfolding& unfolding,
                                                           const DegreeGradedBasis& basis, const Eigenpair& pair) {
  const std::size_t m = unfolding.free_dim();
  std::vector<std::size_t> col_ext(m), row_ext(m);
  for (std::size_t k = 0; k < m; ++k) {
    col_ext[k] = unfolding.col_extent(k);
    row_ext[k] = unfolding.row_extent(k);
  }
  std::vector<std::optional<cplx>> out(m);
  for (std::size_t k = 0; k < m; ++k) {
    const bool use_right = col_ext[k] >= 2;
    if (!use_right && row_ext[k] < 2) continue;
    const Eigen::VectorXcd& vec = use_right ? pair.right : pair.left;
    const std::size_t stride = use_right ? unfolding.col_strides()[k] : unfolding.row_strides()[k];
    if (vec.size() == 0 || !vec.allFinite()) continue;
    if (std::abs(vec(0)) >= 1e-8 * vec.norm()) {
      out[k] = (vec(static_cast<Eigen::Index>(stride)) / vec(0) - basis.beta(0)) / basis.alpha(0);
    } else {
      out[k] = vandermonde_point(basis, mode_factor(vec, use_right ? col_ext : row_ext, k));
    }
  }
  return out;
}

std::vector<std::optional<cplx>> recover_sylvester_components(const DegreeGradedBasis& basis,
                                                              const Eigenpair& pair) {
  return {vandermonde_point(basis, pair.right)};
}

std::vector<RootReport> solve_system(const PolynomialSystem& sys, const SolveOptions& opts) {
  const std::size_t d = sys.dim();
  if (d < 2) throw InputError("the hidden variable method needs d >= 2");
  if (opts.method == Method::sylvester && d != 2) throw InputError("sylvester requires d=2");
  const HiddenVariableForm hv = hide_variable(sys);

  std::optional<CayleyResultant> cayley;
  std::optional<MatrixPolynomial> poly;
  if (opts.method == Method::cayley) {
    cayley = deflate(cayley_resultant(hv), opts.deflate_tol);
    poly = cayley->matrix_poly;
    log_info("cayley resultant: size " + std::to_string(poly->size()) + ", degree " +
             std::to_string(poly->degree()));
  } else {
    poly = sylvester_resultant(hv).matrix_poly.trimmed(opts.deflate_tol);
    log_info("sylvester resultant: size " + std::to_string(poly->size()) + ", degree " +
             std::to_string(poly->degree()));
  }

  if (poly->degree() == 0) {
    if (!is_regular(*poly, opts.eig)) throw NonRegularError("the resultant is identically singular");
    return {};
  }
  const PolyEigResult eig = polyeig(*poly, opts.eig);
  log_debug(std::to_string(eig.pairs.size()) + " finite and " + std::to_string(eig.infinite.size()) +
            " infinite eigenvalues");

  const Domain& dom = sys.domain();
  std::vector<RootReport> candidates;
  for (const Eigenpair& pair : eig.pairs) {
    if (!dom.contains(pair.lambda, opts.domain_margin)) continue;
    const auto comps = cayley ? recover_cayley_components(cayley->unfolding, sys.basis(), pair)
                              : recover_sylvester_components(sys.basis(), pair);
    std::vector<cplx> free(d - 1, cplx(0.0));
    std::vector<std::size_t> unknown;
    for (std::size_t k = 0; k < d - 1; ++k) {
      if (comps[k] && std::isfinite(comps[k]->real()) && std::isfinite(comps[k]->imag())) {
        free[k] = *comps[k];
      } else {
        unknown.push_back(k);
      }
    }
    std::vector<cplx> point = hv.assemble_point(free, pair.lambda);
    RootReport rep;
    rep.eigenvalue = pair.lambda;
    rep.recovered_from = Recovery::eigenvector;
    if (!unknown.empty()) {
      // Map free-axis positions to original variable positions.
      std::vector<std::size_t> positions;
      for (std::size_t k : unknown) positions.push_back(k < hv.hidden_index() ? k : k + 1);
      point = fill_from_grid(sys, point, positions, opts.newton_max_iter);
      rep.recovered_from = Recovery::newton_polish;
    }
    for (const cplx z : system_eval(sys, point)) rep.residuals_unpolished.push_back(std::abs(z));

    rep.root = newton_polish(sys, point, opts.newton_max_iter, opts.newton_step_tol).x;
    if (!std::all_of(rep.root.begin(), rep.root.end(),
                     [&](cplx z) { return dom.contains(z, opts.domain_margin); })) {
      continue;
    }
    for (const cplx z : system_eval(sys, rep.root)) rep.residuals.push_back(std::abs(z));
    rep.spurious = scaled_residual(sys, rep.root) > opts.tol_accept;
    rep.jacobian_cond = root_condition(sys, rep.root).inv_jacobian_norm;
    rep.eig_cond = eig_condition(*poly, pair);
    rep.cond_ratio = rep.eig_cond / rep.jacobian_cond;
    if (std::isnan(rep.cond_ratio)) rep.cond_ratio = std::numeric_limits<double>::infinity();
    candidates.push_back(std::move(rep));
  }

  // Keep the best representative of each cluster.
  std::stable_sort(candidates.begin(), candidates.end(), [&](const RootReport& a, const RootReport& b) {
    if (a.spurious != b.spurious) return !a.spurious;
    return scaled_residual(sys, a.root) < scaled_residual(sys, b.root);
  });
  std::vector<RootReport> kept;
  for (auto& rep : candidates) {
    const bool dup = std::any_of(kept.begin(), kept.end(), [&](const RootReport& k) {
      return max_norm_distance(k.root, rep.root) <= opts.dedup_tol;
    });
    if (!dup) kept.push_back(std::move(rep));
  }
  const std::size_t h = hv.hidden_index();
  std::sort(kept.begin(), kept.end(), [h](const RootReport& a, const RootReport& b) {
    if (a.root[h].real() != b.root[h].real()) return a.root[h].real() < b.root[h].real();
    return a.root[h].imag() < b.root[h].imag();
  });
  return kept;
}

ConditionReport condition_at_root(const PolynomialSystem& sys, std::span<const cplx> root, Method method,
                                  double param) {
  const HiddenVariableForm hv = hide_variable(sys);
  const cplx xd = root[hv.hidden_index()];
  ConditionReport rep;
  rep.param = param;
  rep.d = sys.dim();
  Eigen::VectorXcd v, w;
  std::optional<MatrixPolynomial> poly;
  if (method == Method::cayley) {
    const CayleyResultant res = cayley_resultant(hv);
    const auto vec = cayley_structured_vectors(res, hv, root);
    v = vec.right;
    w = vec.left;
    poly = res.matrix_poly;
  } else {
    const SylvesterResultant res = sylvester_resultant(hv);
    const auto vec = sylvester_structured_vectors(res, hv, root);
    v = vec.right;
    w = vec.left;
    poly = res.matrix_poly;
  }
  rep.rayleigh = w.transpose() * matpoly_deriv_eval(*poly, xd) * v;
  rep.eig_cond = eig_condition(*poly, xd, v, w);
  rep.jacobian_cond = root_condition(sys, root).inv_jacobian_norm;
  rep.ratio = rep.eig_cond / rep.jacobian_cond;
  return rep;
}

std::vector<ConditionReport> condition_sweep(
    const std::function<std::pair<PolynomialSystem, std::vector<cplx>>(double)>& family,
    std::span<const double> params, Method method) {
  std::vector<ConditionReport> rows;
  for (const double p : params) {
    const auto [sys, root] = family(p);
    rows.push_back(condition_at_root(sys, root, method, p));
  }
  return rows;
}

}  // namespace rlab
