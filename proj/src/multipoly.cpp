#include "rlab/multipoly.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rlab/tensor.hpp"

namespace rlab {

MultiPoly::MultiPoly(DegreeGradedBasis basis, std::vector<std::size_t> degrees, std::vector<cplx> coeffs)
    : basis_(std::move(basis)), degrees_(std::move(degrees)), coeffs_(std::move(coeffs)) {
  if (degrees_.empty()) throw InputError("MultiPoly needs at least one variable");
  const auto ext = extents();
  if (tensor::element_count(ext) != coeffs_.size()) {
    throw InputError("MultiPoly: coefficient count " + std::to_string(coeffs_.size()) +
                     " does not match degree extents (" + std::to_string(tensor::element_count(ext)) + ")");
  }
  if (max_degree() > basis_.max_degree()) {
    throw DegreeOverflowError("MultiPoly degree exceeds the basis recurrence tables");
  }
}

MultiPoly MultiPoly::zeros(DegreeGradedBasis basis, std::vector<std::size_t> degrees) {
  std::size_t count = 1;
  for (std::size_t n : degrees) count *= n + 1;
  return MultiPoly(std::move(basis), std::move(degrees), std::vector<cplx>(count, cplx(0.0)));
}

MultiPoly MultiPoly::constant(DegreeGradedBasis basis, std::size_t dim, cplx value) {
  return MultiPoly(std::move(basis), std::vector<std::size_t>(dim, 0), {value});
}

std::vector<std::size_t> MultiPoly::extents() const {
  std::vector<std::size_t> ext(degrees_.size());
  for (std::size_t k = 0; k < degrees_.size(); ++k) ext[k] = degrees_[k] + 1;
  return ext;
}

std::size_t MultiPoly::max_degree() const { return *std::max_element(degrees_.begin(), degrees_.end()); }

std::size_t MultiPoly::flat_index(std::span<const std::size_t> index) const {
  if (index.size() != degrees_.size()) throw InputError("MultiPoly: index dimension mismatch");
  std::size_t flat = 0;
  for (std::size_t k = 0; k < index.size(); ++k) {
    if (index[k] > degrees_[k]) throw InputError("MultiPoly: index out of range");
    flat = flat * (degrees_[k] + 1) + index[k];
  }
  return flat;
}

double MultiPoly::coeff_l1() const {
  double s = 0.0;
  for (const cplx& c : coeffs_) s += std::abs(c);
  return s;
}

double MultiPoly::coeff_max() const {
  double s = 0.0;
  for (const cplx& c : coeffs_) s = std::max(s, std::abs(c));
  return s;
}

// ---------------------------------------------------------------------------

PolynomialSystem::PolynomialSystem(std::vector<MultiPoly> polys) : polys_(std::move(polys)) {
  validate();
  domain_ = polys_.front().basis().domain();
}

PolynomialSystem::PolynomialSystem(std::vector<MultiPoly> polys, Domain domain)
    : polys_(std::move(polys)), domain_(domain) {
  validate();
}

void PolynomialSystem::validate() const {
  if (polys_.empty()) throw InputError("polynomial system has no polynomials");
  const std::size_t d = polys_.size();
  for (std::size_t i = 0; i < d; ++i) {
    if (polys_[i].dim() != d) {
      throw InputError("polynomial " + std::to_string(i + 1) + " has " + std::to_string(polys_[i].dim()) +
                       " variables; a square system of " + std::to_string(d) + " polynomials needs " +
                       std::to_string(d));
    }
    if (!(polys_[i].basis() == polys_.front().basis())) {
      throw InputError("all polynomials of a system must share one basis");
    }
  }
}

cplx mp_eval(const MultiPoly& p, std::span<const cplx> x) {
  if (x.size() != p.dim()) throw InputError("mp_eval: point dimension mismatch");
  std::vector<std::size_t> ext = p.extents();
  std::vector<cplx> data(p.coeffs().begin(), p.coeffs().end());
  for (std::size_t k = p.dim(); k-- > 0;) {
    const auto phi = basis_eval_all(p.basis(), p.degrees()[k], x[k]);
    data = tensor::contract_axis(data, ext, k, phi);
    ext.pop_back();
  }
  return data.front();
}

std::vector<cplx> system_eval(const PolynomialSystem& sys, std::span<const cplx> x) {
  std::vector<cplx> out;
  out.reserve(sys.dim());
  for (const auto& p : sys.polys()) out.push_back(mp_eval(p, x));
  return out;
}

Eigen::MatrixXcd vandermonde(const DegreeGradedBasis& basis, std::span<const cplx> nodes, std::size_t degree) {
  Eigen::MatrixXcd v(static_cast<Eigen::Index>(nodes.size()), static_cast<Eigen::Index>(degree + 1));
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    const auto phi = basis_eval_all(basis, degree, nodes[j]);
    for (std::size_t k = 0; k <= degree; ++k) v(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) = phi[k];
  }
  return v;
}

std::vector<cplx> grid_values(const MultiPoly& p, const std::vector<std::vector<cplx>>& nodes) {
  if (nodes.size() != p.dim()) throw InputError("grid_values: grid dimension mismatch");
  std::vector<std::size_t> ext = p.extents();
  std::vector<cplx> data(p.coeffs().begin(), p.coeffs().end());
  for (std::size_t k = 0; k < p.dim(); ++k) {
    data = tensor::transform_axis(data, ext, k, vandermonde(p.basis(), nodes[k], p.degrees()[k]));
    ext[k] = nodes[k].size();
  }
  return data;
}

std::vector<cplx> interpolate_tensor(const DegreeGradedBasis& basis, const std::vector<std::vector<cplx>>& nodes,
                                     std::span<const cplx> samples) {
  std::vector<std::size_t> ext(nodes.size());
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    if (nodes[k].empty()) throw ConstructionError("interpolation axis without nodes");
    ext[k] = nodes[k].size();
  }
  if (tensor::element_count(ext) != samples.size()) {
    throw InputError("interpolate_tensor: sample count does not match the grid");
  }
  std::vector<cplx> data(samples.begin(), samples.end());
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    const Eigen::MatrixXcd v = vandermonde(basis, nodes[k], nodes[k].size() - 1);
    Eigen::PartialPivLU<Eigen::MatrixXcd> lu(v);
    const double rc = lu.rcond();
    if (!(rc > 10.0 * kEps)) {
      throw ConstructionError("singular Vandermonde system on axis " + std::to_string(k) +
                              " (repeated or degenerate nodes)");
    }
    const Eigen::MatrixXcd inv = lu.inverse();
    data = tensor::transform_axis(data, ext, k, inv);
  }
  return data;
}

std::vector<cplx> interpolation_nodes(const Domain& domain, std::size_t degree) { return domain.nodes(degree + 1); }

MultiPoly mp_interpolate(const DegreeGradedBasis& basis, std::size_t dim, std::vector<std::size_t> degrees,
                         std::span<const cplx> samples) {
  if (degrees.size() != dim) throw InputError("mp_interpolate: degrees must have one entry per variable");
  std::vector<std::vector<cplx>> nodes;
  nodes.reserve(dim);
  for (std::size_t n : degrees) nodes.push_back(interpolation_nodes(basis.domain(), n));
  auto coeffs = interpolate_tensor(basis, nodes, samples);
  return MultiPoly(basis, std::move(degrees), std::move(coeffs));
}

MultiPoly convert_basis(const MultiPoly& p, const DegreeGradedBasis& target) {
  if (p.basis() == target) return p;
  std::vector<std::vector<cplx>> nodes;
  for (std::size_t n : p.degrees()) nodes.push_back(interpolation_nodes(target.domain(), n));
  const auto values = grid_values(p, nodes);
  return MultiPoly(target, p.degrees(), interpolate_tensor(target, nodes, values));
}

// ---------------------------------------------------------------------------

namespace {

MultiPoly move_axis_last(const MultiPoly& p, std::size_t axis) {
  const std::size_t d = p.dim();
  if (axis + 1 == d) return p;
  std::vector<std::size_t> new_deg;
  for (std::size_t k = 0; k < d; ++k)
    if (k != axis) new_deg.push_back(p.degrees()[k]);
  new_deg.push_back(p.degrees()[axis]);
  MultiPoly out = MultiPoly::zeros(p.basis(), new_deg);
  const auto ext = p.extents();
  std::vector<std::size_t> idx(d, 0), moved(d, 0);
  do {
    std::size_t m = 0;
    for (std::size_t k = 0; k < d; ++k)
      if (k != axis) moved[m++] = idx[k];
    moved[d - 1] = idx[axis];
    out(moved) = p(idx);
  } while (tensor::next_index(idx, ext));
  return out;
}

}  // namespace

HiddenVariableForm::HiddenVariableForm(PolynomialSystem source, std::size_t hidden_index)
    : source_(std::move(source)), hidden_(hidden_index) {
  if (hidden_ >= source_.dim()) throw InputError("hidden variable index out of range");
  for (const auto& p : source_.polys()) permuted_.push_back(move_axis_last(p, hidden_));
}

std::size_t HiddenVariableForm::hidden_degree() const {
  std::size_t n = 0;
  for (const auto& p : permuted_) n = std::max(n, p.degrees().back());
  return n;
}

std::size_t HiddenVariableForm::free_degree() const {
  std::size_t n = 0;
  for (const auto& p : permuted_)
    for (std::size_t k = 0; k + 1 < p.dim(); ++k) n = std::max(n, p.degrees()[k]);
  return n;
}

std::vector<cplx> HiddenVariableForm::coefficient(std::size_t k, std::span<const std::size_t> index) const {
  const MultiPoly& p = permuted_.at(k);
  const std::size_t d = p.dim();
  if (index.size() + 1 != d) throw InputError("coefficient: index must address the free variables");
  const std::size_t len = p.degrees().back() + 1;
  std::vector<cplx> out(len, cplx(0.0));
  std::vector<std::size_t> full(index.begin(), index.end());
  full.push_back(0);
  for (std::size_t k2 = 0; k2 + 1 < d; ++k2)
    if (full[k2] > p.degrees()[k2]) return out;
  const std::size_t base = p.flat_index(full);
  for (std::size_t j = 0; j < len; ++j) out[j] = p.coeffs()[base + j];
  return out;
}

std::vector<MultiPoly> HiddenVariableForm::specialize(cplx hidden_value) const {
  std::vector<MultiPoly> out;
  out.reserve(permuted_.size());
  for (const auto& p : permuted_) {
    const std::size_t d = p.dim();
    const auto phi = basis_eval_all(p.basis(), p.degrees().back(), hidden_value);
    auto data = tensor::contract_axis(p.coeffs(), p.extents(), d - 1, phi);
    std::vector<std::size_t> deg(p.degrees().begin(), p.degrees().end() - 1);
    if (deg.empty()) throw InputError("cannot specialize a univariate system");
    out.emplace_back(p.basis(), std::move(deg), std::move(data));
  }
  return out;
}

cplx HiddenVariableForm::reassemble_eval(std::size_t k, std::span<const cplx> point) const {
  const MultiPoly& p = permuted_.at(k);
  const std::size_t d = p.dim();
  const auto free = free_part(point);
  const cplx xh = point[hidden_];
  std::vector<std::vector<cplx>> phis;
  for (std::size_t a = 0; a + 1 < d; ++a) phis.push_back(basis_eval_all(p.basis(), p.degrees()[a], free[a]));

  std::vector<std::size_t> ext = p.extents();
  ext.pop_back();
  std::vector<std::size_t> idx(d - 1, 0);
  cplx sum = 0.0;
  do {
    cplx w = 1.0;
    for (std::size_t a = 0; a + 1 < d; ++a) w *= phis[a][idx[a]];
    sum += w * clenshaw_eval(p.basis(), coefficient(k, idx), xh).value;
  } while (tensor::next_index(idx, ext));
  return sum;
}

std::vector<cplx> HiddenVariableForm::free_part(std::span<const cplx> point) const {
  std::vector<cplx> out;
  for (std::size_t k = 0; k < point.size(); ++k)
    if (k != hidden_) out.push_back(point[k]);
  return out;
}

std::vector<cplx> HiddenVariableForm::assemble_point(std::span<const cplx> free, cplx hidden_value) const {
  std::vector<cplx> out;
  std::size_t m = 0;
  for (std::size_t k = 0; k < dim(); ++k) out.push_back(k == hidden_ ? hidden_value : free[m++]);
  return out;
}

HiddenVariableForm hide_variable(const PolynomialSystem& sys) { return HiddenVariableForm(sys, sys.dim() - 1); }

HiddenVariableForm hide_variable(const PolynomialSystem& sys, std::size_t hidden_index) {
  return HiddenVariableForm(sys, hidden_index);
}

// ---------------------------------------------------------------------------

std::vector<cplx> fiber(const MultiPoly& p, std::span<const cplx> x, std::size_t axis) {
  if (x.size() != p.dim() || axis >= p.dim()) throw InputError("fiber: dimension mismatch");
  std::vector<std::size_t> ext = p.extents();
  std::vector<cplx> data(p.coeffs().begin(), p.coeffs().end());
  for (std::size_t k = p.dim(); k-- > 0;) {
    if (k == axis) continue;
    const auto phi = basis_eval_all(p.basis(), p.degrees()[k], x[k]);
    data = tensor::contract_axis(data, ext, k, phi);
    ext.erase(ext.begin() + std::ptrdiff_t(k));
  }
  return data;
}

Eigen::MatrixXcd jacobian(const PolynomialSystem& sys, std::span<const cplx> x) {
  const std::size_t d = sys.dim();
  if (x.size() != d) throw InputError("jacobian: point dimension mismatch");
  Eigen::MatrixXcd j(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      j(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = derivative_eval(sys.basis(), fiber(sys[r], x, c), x[c]);
    }
  }
  return j;
}

RootCondition root_condition(const Eigen::MatrixXcd& jac) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(jac);
  const auto& s = svd.singularValues();
  RootCondition rc;
  rc.sigma_max = s.size() ? s(0) : 0.0;
  rc.sigma_min = s.size() ? s(s.size() - 1) : 0.0;
  rc.inv_jacobian_norm = rc.sigma_min > 0.0 ? 1.0 / rc.sigma_min : std::numeric_limits<double>::infinity();
  rc.simple = rc.sigma_min > 1e3 * kEps * rc.sigma_max;
  return rc;
}

RootCondition root_condition(const PolynomialSystem& sys, std::span<const cplx> x) {
  return root_condition(jacobian(sys, x));
}

std::uint64_t max_solution_bound(const PolynomialSystem& sys) {
  std::uint64_t n = 0;
  for (const auto& p : sys.polys()) n = std::max<std::uint64_t>(n, p.max_degree());
  std::uint64_t bound = 1;
  for (std::uint64_t k = 2; k <= sys.dim(); ++k) bound *= k;
  for (std::size_t k = 0; k < sys.dim(); ++k) bound *= n;
  return bound;
}

}  // namespace rlab
