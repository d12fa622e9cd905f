#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "rlab/common.hpp"

// Dense row-major tensor helpers (last axis fastest).
namespace rlab::tensor {

std::size_t element_count(std::span<const std::size_t> extents);

std::vector<std::size_t> row_major_strides(std::span<const std::size_t> extents);

/// Advances a multi-index in row-major order; returns false after the last one.
bool next_index(std::vector<std::size_t>& index, std::span<const std::size_t> extents);

/// Applies `m` along `axis`: out[.., r, ..] = sum_c m(r, c) * data[.., c, ..].
/// The axis extent becomes m.rows().
std::vector<cplx> transform_axis(std::span<const cplx> data, std::span<const std::size_t> extents,
                                 std::size_t axis, const Eigen::MatrixXcd& m);

/// Contracts `axis` against `weights`, removing it.
std::vector<cplx> contract_axis(std::span<const cplx> data, std::span<const std::size_t> extents,
                                std::size_t axis, std::span<const cplx> weights);

}  // namespace rlab::tensor
