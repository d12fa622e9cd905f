#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "rlab/basis.hpp"

namespace rlab {

/// Dense d-variate polynomial of maximal degree,
///   p(x) = sum A[i_1..i_d] prod_k phi_{i_k}(x_k),
/// with 0 <= i_k <= degrees[k]. Coefficients are stored row-major (last
/// variable fastest).
class MultiPoly {
 public:
  MultiPoly(DegreeGradedBasis basis, std::vector<std::size_t> degrees, std::vector<cplx> coeffs);

  static MultiPoly zeros(DegreeGradedBasis basis, std::vector<std::size_t> degrees);
  static MultiPoly constant(DegreeGradedBasis basis, std::size_t dim, cplx value);

  const DegreeGradedBasis& basis() const { return basis_; }
  std::size_t dim() const { return degrees_.size(); }
  const std::vector<std::size_t>& degrees() const { return degrees_; }
  std::vector<std::size_t> extents() const;
  std::size_t max_degree() const;

  std::span<const cplx> coeffs() const { return coeffs_; }
  std::span<cplx> coeffs() { return coeffs_; }

  std::size_t flat_index(std::span<const std::size_t> index) const;
  const cplx& operator()(std::span<const std::size_t> index) const { return coeffs_[flat_index(index)]; }
  cplx& operator()(std::span<const std::size_t> index) { return coeffs_[flat_index(index)]; }

  /// Sum of coefficient magnitudes; bounds sup |p| on Omega^d for a normalized basis.
  double coeff_l1() const;
  double coeff_max() const;

 private:
  DegreeGradedBasis basis_;
  std::vector<std::size_t> degrees_;
  std::vector<cplx> coeffs_;
};

/// Square system p_1 = ... = p_d = 0 over Omega^d.
class PolynomialSystem {
 public:
  explicit PolynomialSystem(std::vector<MultiPoly> polys);
  PolynomialSystem(std::vector<MultiPoly> polys, Domain domain);

  std::size_t dim() const { return polys_.size(); }
  const std::vector<MultiPoly>& polys() const { return polys_; }
  const MultiPoly& operator[](std::size_t i) const { return polys_[i]; }
  const DegreeGradedBasis& basis() const { return polys_.front().basis(); }
  const Domain& domain() const { return domain_; }

 private:
  void validate() const;

  std::vector<MultiPoly> polys_;
  Domain domain_;
};

cplx mp_eval(const MultiPoly& p, std::span<const cplx> x);

std::vector<cplx> system_eval(const PolynomialSystem& sys, std::span<const cplx> x);

/// Values of p on the tensor grid nodes[0] x ... x nodes[d-1], row-major.
std::vector<cplx> grid_values(const MultiPoly& p, const std::vector<std::vector<cplx>>& nodes);

/// Generalized Vandermonde matrix V(j, k) = phi_k(nodes[j]), k <= degree.
Eigen::MatrixXcd vandermonde(const DegreeGradedBasis& basis, std::span<const cplx> nodes, std::size_t degree);

/// Coefficient tensor from samples on an arbitrary tensor grid. The node count
/// along axis k fixes the degree n_k = |nodes[k]| - 1. Throws ConstructionError
/// for a singular Vandermonde factor (repeated nodes).
std::vector<cplx> interpolate_tensor(const DegreeGradedBasis& basis, const std::vector<std::vector<cplx>>& nodes,
                                     std::span<const cplx> samples);

/// Interpolation nodes used by mp_interpolate for a degree-n axis.
std::vector<cplx> interpolation_nodes(const Domain& domain, std::size_t degree);

/// Inverse of grid evaluation on the default nodes of the basis domain.
MultiPoly mp_interpolate(const DegreeGradedBasis& basis, std::size_t dim, std::vector<std::size_t> degrees,
                         std::span<const cplx> samples);

/// Re-expands p in another basis (same function, same degrees).
MultiPoly convert_basis(const MultiPoly& p, const DegreeGradedBasis& target);

/// p_k viewed as polynomials in the remaining variables with coefficients
/// that are univariate polynomials in the hidden variable.
class HiddenVariableForm {
 public:
  HiddenVariableForm(PolynomialSystem source, std::size_t hidden_index);

  const PolynomialSystem& source() const { return source_; }
  std::size_t dim() const { return source_.dim(); }
  std::size_t hidden_index() const { return hidden_; }
  const DegreeGradedBasis& basis() const { return source_.basis(); }
  const Domain& domain() const { return source_.domain(); }

  /// Source polynomials with axes permuted so the hidden variable is last.
  const std::vector<MultiPoly>& permuted() const { return permuted_; }

  /// Degree bound in the hidden variable (max over the system).
  std::size_t hidden_degree() const;
  /// Maximal degree n over the free variables.
  std::size_t free_degree() const;

  /// c_{i_1..i_{d-1}}(.) for polynomial k; index is over the free variables
  /// in their original relative order.
  std::vector<cplx> coefficient(std::size_t k, std::span<const std::size_t> index) const;

  /// q_k = p_k[x_hidden] as (d-1)-variate polynomials.
  std::vector<MultiPoly> specialize(cplx hidden_value) const;

  /// Evaluates p_k by re-assembling the hidden coefficients at the point
  /// (point given in original variable order).
  cplx reassemble_eval(std::size_t k, std::span<const cplx> point) const;

  /// Splits a full point into (free components, hidden component).
  std::vector<cplx> free_part(std::span<const cplx> point) const;
  std::vector<cplx> assemble_point(std::span<const cplx> free, cplx hidden_value) const;

 private:
  PolynomialSystem source_;
  std::size_t hidden_;
  std::vector<MultiPoly> permuted_;
};

HiddenVariableForm hide_variable(const PolynomialSystem& sys);
HiddenVariableForm hide_variable(const PolynomialSystem& sys, std::size_t hidden_index);

/// Univariate coefficients of p along `axis` with every other variable fixed at x.
std::vector<cplx> fiber(const MultiPoly& p, std::span<const cplx> x, std::size_t axis);

Eigen::MatrixXcd jacobian(const PolynomialSystem& sys, std::span<const cplx> x);

struct RootCondition {
  double inv_jacobian_norm = 0.0;  // ||J^{-1}||_2, +inf when J is singular
  double sigma_min = 0.0;
  double sigma_max = 0.0;
  bool simple = true;
};

RootCondition root_condition(const PolynomialSystem& sys, std::span<const cplx> x);
RootCondition root_condition(const Eigen::MatrixXcd& jac);

/// d! n^d with n the maximal degree over the system.
std::uint64_t max_solution_bound(const PolynomialSystem& sys);

}  // namespace rlab
