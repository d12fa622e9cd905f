#include "rlab/cayley.hpp"

#include <algorithm>
#include <cmath>

#include "rlab/tensor.hpp"

namespace rlab {

std::vector<std::size_t> CayleyTensor::extents() const {
  std::vector<std::size_t> ext;
  for (std::size_t t : taus) ext.push_back(t + 1);
  for (std::size_t k = taus.size(); k-- > 0;) ext.push_back(taus[k] + 1);
  return ext;
}

CayleyUnfolding::CayleyUnfolding(std::vector<std::size_t> taus) : taus_(std::move(taus)) {
  if (taus_.empty()) throw InputError("Cayley unfolding needs at least one free variable");
  std::size_t rs = 1, cs = 1;
  for (std::size_t k = 0; k < taus_.size(); ++k) {
    row_strides_.push_back(rs);
    col_strides_.push_back(cs);
    rs *= row_extent(k);
    cs *= col_extent(k);
  }
  size_ = rs;
}

std::size_t CayleyUnfolding::row_index(std::span<const std::size_t> i) const {
  std::size_t r = 0;
  for (std::size_t k = 0; k < taus_.size(); ++k) r += row_strides_[k] * i[k];
  return r;
}

std::size_t CayleyUnfolding::col_index(std::span<const std::size_t> j) const {
  std::size_t c = 0;
  for (std::size_t k = 0; k < taus_.size(); ++k) c += col_strides_[k] * j[k];
  return c;
}

std::vector<std::size_t> CayleyUnfolding::row_multi(std::size_t r) const {
  std::vector<std::size_t> out(taus_.size());
  for (std::size_t k = 0; k < taus_.size(); ++k) {
    out[k] = r % row_extent(k);
    r /= row_extent(k);
  }
  return out;
}

std::vector<std::size_t> CayleyUnfolding::col_multi(std::size_t c) const {
  std::vector<std::size_t> out(taus_.size());
  for (std::size_t k = 0; k < taus_.size(); ++k) {
    out[k] = c % col_extent(k);
    c /= col_extent(k);
  }
  return out;
}

Eigen::MatrixXcd CayleyUnfolding::unfold(const CayleyTensor& tensor) const {
  if (tensor.taus != taus_) throw InputError("Cayley tensor does not match the unfolding extents");
  const std::size_t m = taus_.size();
  const auto ext = tensor.extents();
  Eigen::MatrixXcd out(static_cast<Eigen::Index>(size_), static_cast<Eigen::Index>(size_));
  std::vector<std::size_t> idx(2 * m, 0);
  std::size_t flat = 0;
  do {
    const std::span<const std::size_t> all(idx);
    out(static_cast<Eigen::Index>(row_index(all.first(m))), static_cast<Eigen::Index>(col_index(all.last(m)))) = tensor.coeffs[flat++];
  } while (tensor::next_index(idx, ext));
  return out;
}

// ---------------------------------------------------------------------------

namespace {

Eigen::MatrixXcd cayley_matrix(const std::vector<MultiPoly>& q, std::span<const cplx> s, std::span<const cplx> t) {
  const std::size_t d = q.size();
  Eigen::MatrixXcd m(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  std::vector<cplx> point(d - 1);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t k = 0; k + 1 < d; ++k) point[k] = k < r ? t[k] : s[k];
    for (std::size_t c = 0; c < d; ++c) m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = mp_eval(q[c], point);
  }
  return m;
}

// Splits an interleaved set of Chebyshev points between the s- and t-axis of one variable.
void split_nodes(const Domain& domain, std::size_t ns, std::size_t nt, std::vector<cplx>& s_nodes,
                 std::vector<cplx>& t_nodes) {
  const auto pool = domain.interior_nodes(ns + nt);
  s_nodes.clear();
  t_nodes.clear();
  bool to_s = true;
  for (const cplx z : pool) {
    const bool s_open = s_nodes.size() < ns;
    const bool t_open = t_nodes.size() < nt;
    if ((to_s && s_open) || !t_open) {
      s_nodes.push_back(z);
    } else {
      t_nodes.push_back(z);
    }
    to_s = !to_s;
  }
}

}  // namespace

cplx cayley_function_eval(const HiddenVariableForm& hv, std::span<const cplx> s, std::span<const cplx> t,
                          cplx hidden_value) {
  const std::size_t m = hv.dim() - 1;
  if (hv.dim() < 2) throw InputError("the Cayley function needs d >= 2");
  if (s.size() != m || t.size() != m) throw InputError("cayley_function_eval: s and t need d - 1 components");
  cplx denom = 1.0;
  for (std::size_t k = 0; k < m; ++k) {
    if (s[k] == t[k]) {
      throw InputError("cayley_function_eval: s and t coincide in a component; use the diagonal evaluation");
    }
    denom *= s[k] - t[k];
  }
  const auto q = hv.specialize(hidden_value);
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(cayley_matrix(q, s, t));
  return lu.determinant() / denom;
}

std::vector<std::size_t> cayley_taus(const HiddenVariableForm& hv) {
  const std::size_t n = hv.free_degree();
  if (n == 0) throw ConstructionError("the system does not depend on the free variables");
  std::vector<std::size_t> taus;
  for (std::size_t k = 1; k < hv.dim(); ++k) taus.push_back(k * n - 1);
  return taus;
}

CayleyTensor cayley_coeffs(const HiddenVariableForm& hv, cplx hidden_value) {
  if (hv.dim() < 2) throw InputError("the Cayley function needs d >= 2");
  const std::size_t d = hv.dim();
  const std::size_t m = d - 1;
  CayleyTensor out{hv.basis(), d, cayley_taus(hv), {}};
  const CayleyUnfolding shape(out.taus);

  std::vector<std::vector<cplx>> s_nodes(m), t_nodes(m);
  for (std::size_t k = 0; k < m; ++k) {
    split_nodes(hv.domain(), shape.row_extent(k), shape.col_extent(k), s_nodes[k], t_nodes[k]);
  }

  // Row r of the Cayley matrix samples q_c on the grid (t_1..t_r, s_{r+1}..s_{d-1}).
  const auto q = hv.specialize(hidden_value);
  std::vector<std::vector<std::vector<cplx>>> tables(d);
  std::vector<std::vector<std::size_t>> table_strides(d);
  for (std::size_t r = 0; r < d; ++r) {
    std::vector<std::vector<cplx>> nodes(m);
    std::vector<std::size_t> ext(m);
    for (std::size_t k = 0; k < m; ++k) {
      nodes[k] = k < r ? t_nodes[k] : s_nodes[k];
      ext[k] = nodes[k].size();
    }
    table_strides[r] = tensor::row_major_strides(ext);
    for (std::size_t c = 0; c < d; ++c) tables[r].push_back(grid_values(q[c], nodes));
  }

  std::vector<std::vector<cplx>> grid;
  for (std::size_t k = 0; k < m; ++k) grid.push_back(s_nodes[k]);
  for (std::size_t k = 0; k < m; ++k) grid.push_back(t_nodes[k]);
  std::vector<std::size_t> ext(2 * m);
  for (std::size_t a = 0; a < 2 * m; ++a) ext[a] = grid[a].size();

  std::vector<cplx> samples;
  samples.reserve(tensor::element_count(ext));
  std::vector<std::size_t> idx(2 * m, 0);
  Eigen::MatrixXcd mat(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  do {
    cplx denom = 1.0;
    for (std::size_t k = 0; k < m; ++k) denom *= grid[k][idx[k]] - grid[m + k][idx[m + k]];
    for (std::size_t r = 0; r < d; ++r) {
      std::size_t flat = 0;
      for (std::size_t k = 0; k < m; ++k) flat += table_strides[r][k] * (k < r ? idx[m + k] : idx[k]);
      for (std::size_t c = 0; c < d; ++c) mat(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = tables[r][c][flat];
    }
    samples.push_back(Eigen::PartialPivLU<Eigen::MatrixXcd>(mat).determinant() / denom);
  } while (tensor::next_index(idx, ext));

  out.coeffs = interpolate_tensor(hv.basis(), grid, samples);
  return out;
}

cplx cayley_tensor_eval(const CayleyTensor& tensor, std::span<const cplx> s, std::span<const cplx> t) {
  const std::size_t m = tensor.taus.size();
  if (s.size() != m || t.size() != m) throw InputError("cayley_tensor_eval: s and t need d - 1 components");
  std::vector<std::size_t> ext = tensor.extents();
  std::vector<cplx> data = tensor.coeffs;
  for (std::size_t a = 2 * m; a-- > 0;) {
    const cplx x = a < m ? s[a] : t[a - m];
    const auto phi = basis_eval_all(tensor.basis, ext[a] - 1, x);
    data = tensor::contract_axis(data, ext, a, phi);
    ext.pop_back();
  }
  return data.front();
}

CayleyResultant cayley_resultant(const HiddenVariableForm& hv) {
  const std::size_t d = hv.dim();
  const std::size_t degree = d * hv.hidden_degree();
  CayleyUnfolding unfolding(cayley_taus(hv));
  const auto n = static_cast<Eigen::Index>(unfolding.size());
  const auto nodes = interpolation_nodes(hv.domain(), degree);

  Eigen::MatrixXcd samples(static_cast<Eigen::Index>(nodes.size()), n * n);
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    const Eigen::MatrixXcd r = unfolding.unfold(cayley_coeffs(hv, nodes[j]));
    samples.row(static_cast<Eigen::Index>(j)) = r.reshaped().transpose();
  }
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(vandermonde(hv.basis(), nodes, degree));
  if (!(lu.rcond() > 10.0 * kEps)) throw ConstructionError("singular Vandermonde system in the hidden variable");
  const Eigen::MatrixXcd coeffs = lu.solve(samples);

  std::vector<Eigen::MatrixXcd> mats;
  for (Eigen::Index i = 0; i <= static_cast<Eigen::Index>(degree); ++i) {
    mats.push_back(coeffs.row(i).transpose().reshaped(n, n));
  }
  return CayleyResultant{MatrixPolynomial(hv.basis(), std::move(mats)), std::move(unfolding), false};
}

CayleyResultant deflate(const CayleyResultant& res, double rel_tol) {
  const CayleyUnfolding& old = res.unfolding;
  const std::size_t m = old.free_dim();
  double overall = 0.0;
  for (const auto& a : res.matrix_poly.coeffs()) overall = std::max(overall, a.cwiseAbs().maxCoeff());
  const double cut = rel_tol * overall;

  std::vector<std::size_t> last_i(m, 0), last_j(m, 0);
  for (const auto& a : res.matrix_poly.coeffs()) {
    for (Eigen::Index c = 0; c < a.cols(); ++c) {
      for (Eigen::Index r = 0; r < a.rows(); ++r) {
        if (std::abs(a(r, c)) <= cut) continue;
        const auto i = old.row_multi(std::size_t(r));
        const auto j = old.col_multi(std::size_t(c));
        for (std::size_t k = 0; k < m; ++k) {
          last_i[k] = std::max(last_i[k], i[k]);
          last_j[k] = std::max(last_j[k], j[k]);
        }
      }
    }
  }
  // tau_k bounds both the i_k axis and the j_{d-k} axis.
  std::vector<std::size_t> taus(m);
  for (std::size_t k = 0; k < m; ++k) taus[k] = std::max(last_i[k], last_j[m - 1 - k]);

  CayleyUnfolding shrunk(taus);
  std::vector<std::size_t> rows(shrunk.size()), cols(shrunk.size());
  for (std::size_t r = 0; r < shrunk.size(); ++r) rows[r] = old.row_index(shrunk.row_multi(r));
  for (std::size_t c = 0; c < shrunk.size(); ++c) cols[c] = old.col_index(shrunk.col_multi(c));
  MatrixPolynomial poly = res.matrix_poly.restricted(rows, cols).trimmed(rel_tol);
  return CayleyResultant{std::move(poly), std::move(shrunk), true};
}

cplx cayley_diagonal_value(const HiddenVariableForm& hv, std::span<const cplx> point) {
  const auto free = hv.free_part(point);
  const CayleyTensor tensor = cayley_coeffs(hv, point[hv.hidden_index()]);
  return cayley_tensor_eval(tensor, free, free);
}

cplx cayley_diagonal_derivative(const HiddenVariableForm& hv, std::span<const cplx> point) {
  const std::size_t h_idx = hv.hidden_index();
  const cplx xd = point[h_idx];
  std::vector<cplx> shifted(point.begin(), point.end());
  auto central = [&](double h) {
    shifted[h_idx] = xd + h;
    const cplx up = cayley_diagonal_value(hv, shifted);
    shifted[h_idx] = xd - h;
    const cplx down = cayley_diagonal_value(hv, shifted);
    return (up - down) / (2.0 * h);
  };
  const double h = 1e-3 * std::max(1.0, std::abs(xd));
  return (4.0 * central(0.5 * h) - central(h)) / 3.0;
}

StructuredEigvectors cayley_structured_vectors(const CayleyResultant& res, const HiddenVariableForm& hv,
                                               std::span<const cplx> root) {
  const CayleyUnfolding& u = res.unfolding;
  const std::size_t m = u.free_dim();
  const auto free = hv.free_part(root);
  if (free.size() != m) throw InputError("root dimension does not match the resultant");

  std::size_t top = 0;
  for (std::size_t t : u.taus()) top = std::max(top, t);
  std::vector<std::vector<cplx>> phi;
  for (std::size_t k = 0; k < m; ++k) phi.push_back(basis_eval_all(hv.basis(), top, free[k]));

  StructuredEigvectors out;
  out.right.resize(static_cast<Eigen::Index>(u.size()));
  out.left.resize(static_cast<Eigen::Index>(u.size()));
  for (std::size_t c = 0; c < u.size(); ++c) {
    const auto j = u.col_multi(c);
    cplx prod = 1.0;
    for (std::size_t k = 0; k < m; ++k) prod *= phi[k][j[k]];
    out.right(static_cast<Eigen::Index>(c)) = prod;
  }
  for (std::size_t r = 0; r < u.size(); ++r) {
    const auto i = u.row_multi(r);
    cplx prod = 1.0;
    for (std::size_t k = 0; k < m; ++k) prod *= phi[k][i[k]];
    out.left(static_cast<Eigen::Index>(r)) = prod;
  }

  const Eigen::MatrixXcd r = matpoly_eval(res.matrix_poly, root[hv.hidden_index()]);
  const double rn = r.size() ? Eigen::JacobiSVD<Eigen::MatrixXcd>(r).singularValues()(0) : 0.0;
  if (rn > 0.0) {
    out.residual_right = (r * out.right).norm() / (rn * out.right.norm());
    out.residual_left = (out.left.transpose() * r).norm() / (rn * out.left.norm());
  }
  return out;
}

StructuredEigvectors cayley_root_eigvectors(const CayleyResultant& res, const HiddenVariableForm& hv,
                                            std::span<const cplx> root, double tol) {
  StructuredEigvectors out = cayley_structured_vectors(res, hv, root);
  if (out.residual_right > tol || out.residual_left > tol) {
    throw StructuralError("Cayley eigenvector structure violated: right residual " +
                          std::to_string(out.residual_right) + ", left residual " +
                          std::to_string(out.residual_left));
  }
  return out;
}

}  // namespace rlab
