#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "rlab/cayley.hpp"
#include "rlab/matpoly.hpp"
#include "rlab/multipoly.hpp"
#include "rlab/sylvester.hpp"

namespace rlab {

enum class Method { cayley, sylvester };
enum class Recovery { eigenvector, newton_polish };

std::string_view method_name(Method m);
std::string_view recovery_name(Recovery r);

struct SolveOptions {
  Method method = Method::cayley;
  double tol_accept = 1e-7;      // scaled residual max_i |p_i| / sum |coeffs of p_i|
  double dedup_tol = 1e-8;       // max-norm distance
  double domain_margin = 1e-6;
  std::size_t newton_max_iter = 20;
  double newton_step_tol = 1e-14;
  double deflate_tol = 1e-12;
  PolyEigOptions eig;
};

struct RootReport {
  std::vector<cplx> root;
  std::vector<double> residuals;           // |p_i(root)| after polishing
  std::vector<double> residuals_unpolished;
  double jacobian_cond = 0.0;               // ||J^{-1}||_2
  double eig_cond = 0.0;                    // kappa(x_d*, R) of the computed eigenpair
  double cond_ratio = 0.0;                  // eig_cond / jacobian_cond
  Recovery recovered_from = Recovery::eigenvector;
  bool spurious = false;
  cplx eigenvalue{};
};

/// max_i |p_i(x)| / coeff_l1(p_i).
double scaled_residual(const PolynomialSystem& sys, std::span<const cplx> x);

struct NewtonResult {
  std::vector<cplx> x;
  std::size_t iterations = 0;
  bool converged = false;
};

/// Newton on the full system; returns the iterate with the smallest scaled
/// residual seen.
NewtonResult newton_polish(const PolynomialSystem& sys, std::span<const cplx> start, std::size_t max_iter = 20,
                           double step_tol = 1e-14);

/// Free components x_1..x_{d-1} (hidden-form order) read from an eigenpair.
/// Entries that could not be recovered are empty.
std::vector<std::optional<cplx>> recover_cayley_components(const CayleyUnfolding& unfolding,
                                                           const DegreeGradedBasis& basis, const Eigenpair& pair);
std::vector<std::optional<cplx>> recover_sylvester_components(const DegreeGradedBasis& basis,
                                                              const Eigenpair& pair);

/// x with (v_1/v_0 - beta_0)/alpha_0 when |v_0| >= 1e-8 ||v||, otherwise the
/// point of the domain whose Vandermonde vector is best aligned with v.
std::optional<cplx> vandermonde_point(const DegreeGradedBasis& basis, const Eigen::VectorXcd& v);

std::vector<RootReport> solve_system(const PolynomialSystem& sys, const SolveOptions& opts = {});

/// kappa of the known root x* as an eigenvalue of the full resultant, with
/// the structured eigenvectors.
struct ConditionReport {
  double param = 0.0;
  std::size_t d = 0;
  double jacobian_cond = 0.0;
  double eig_cond = 0.0;
  double ratio = 0.0;
  cplx rayleigh{};  // w^T R'(x_d*) v
};

ConditionReport condition_at_root(const PolynomialSystem& sys, std::span<const cplx> root, Method method,
                                  double param = 0.0);

/// Runs condition_at_root over a parameter grid; family(param) returns the
/// system and its known root.
std::vector<ConditionReport> condition_sweep(
    const std::function<std::pair<PolynomialSystem, std::vector<cplx>>(double)>& family,
    std::span<const double> params, Method method);

}  // namespace rlab
