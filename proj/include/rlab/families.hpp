#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "rlab/multipoly.hpp"

namespace rlab {

/// Interpolates f on the default grid of the basis domain.
MultiPoly from_function(const DegreeGradedBasis& basis, std::vector<std::size_t> degrees,
                        const std::function<cplx(std::span<const cplx>)>& f);

/// Haar-distributed orthogonal matrix from a seeded generator.
Eigen::MatrixXd random_orthogonal(std::size_t d, std::uint64_t seed);

/// p_i = x_i^2 + sigma sum_j q_ij x_j; simple root at the origin with J = sigma Q.
PolynomialSystem example_c(std::size_t d, double sigma, const Eigen::MatrixXd& q,
                           const DegreeGradedBasis& basis = DegreeGradedBasis::monomial());

/// p_1 = x_1^2 + sigma(alpha x_1 + beta x_2), p_2 = x_2^2 + sigma(-beta x_1 + alpha x_2).
PolynomialSystem example_s(double sigma, double alpha, double beta,
                           const DegreeGradedBasis& basis = DegreeGradedBasis::monomial());

/// Pairwise rotated quadratics with scale u; odd d ends with x_d^2 + u x_d.
PolynomialSystem relcond_system(std::size_t d, double u,
                                const DegreeGradedBasis& basis = DegreeGradedBasis::monomial());

/// p_i = sum_j A_ij x_j + b_i.
PolynomialSystem linear_system(const Eigen::MatrixXd& a, const Eigen::VectorXd& b,
                               const DegreeGradedBasis& basis = DegreeGradedBasis::monomial());

/// Random well-conditioned matrix with 2-norm condition number <= max_cond.
Eigen::MatrixXd random_conditioned_matrix(std::size_t d, double max_cond, std::mt19937_64& rng);

struct PlantedSystem {
  PolynomialSystem system;
  std::vector<cplx> root;
};

/// Uniform random real coefficients of degree n in each variable; the constant
/// terms are shifted so a random point of [-0.8, 0.8]^d is an exact root.
PlantedSystem planted_random_system(std::size_t d, std::size_t n, std::mt19937_64& rng,
                                    const DegreeGradedBasis& basis = DegreeGradedBasis::monomial());

struct KnownRootsSystem {
  std::string name;
  PolynomialSystem system;
  std::vector<std::vector<cplx>> roots;
};

/// Bivariate systems whose roots are all known in closed form, simple, inside
/// [-1, 1]^2 and with pairwise distinct x_2 components.
std::vector<KnownRootsSystem> known_roots_corpus(std::uint64_t seed = 0,
                                                 const DegreeGradedBasis& basis = DegreeGradedBasis::monomial());

}  // namespace rlab
