#include "rlab/tensor.hpp"

namespace rlab::tensor {

std::size_t element_count(std::span<const std::size_t> extents) {
  std::size_t count = 1;
  for (std::size_t e : extents) count *= e;
  return count;
}

std::vector<std::size_t> row_major_strides(std::span<const std::size_t> extents) {
  std::vector<std::size_t> strides(extents.size(), 1);
  for (std::size_t k = extents.size(); k-- > 1;) strides[k - 1] = strides[k] * extents[k];
  return strides;
}

bool next_index(std::vector<std::size_t>& index, std::span<const std::size_t> extents) {
  for (std::size_t k = index.size(); k-- > 0;) {
    if (++index[k] < extents[k]) return true;
    index[k] = 0;
  }
  return false;
}

std::vector<cplx> transform_axis(std::span<const cplx> data, std::span<const std::size_t> extents,
                                 std::size_t axis, const Eigen::MatrixXcd& m) {
  if (axis >= extents.size() || std::size_t(m.cols()) != extents[axis]) {
    throw InputError("transform_axis: matrix does not match axis extent");
  }
  std::size_t outer = 1;
  for (std::size_t k = 0; k < axis; ++k) outer *= extents[k];
  std::size_t inner = 1;
  for (std::size_t k = axis + 1; k < extents.size(); ++k) inner *= extents[k];
  const std::size_t in_len = extents[axis];
  const std::size_t out_len = std::size_t(m.rows());

  std::vector<cplx> out(outer * out_len * inner, cplx(0.0));
  for (std::size_t o = 0; o < outer; ++o) {
    const cplx* src = data.data() + o * in_len * inner;
    cplx* dst = out.data() + o * out_len * inner;
    for (std::size_t r = 0; r < out_len; ++r) {
      for (std::size_t c = 0; c < in_len; ++c) {
        const cplx w = m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
        if (w == cplx(0.0)) continue;
        for (std::size_t i = 0; i < inner; ++i) dst[r * inner + i] += w * src[c * inner + i];
      }
    }
  }
  return out;
}

std::vector<cplx> contract_axis(std::span<const cplx> data, std::span<const std::size_t> extents,
                                std::size_t axis, std::span<const cplx> weights) {
  Eigen::MatrixXcd row(1, static_cast<Eigen::Index>(weights.size()));
  for (std::size_t c = 0; c < weights.size(); ++c) row(0, static_cast<Eigen::Index>(c)) = weights[c];
  return transform_axis(data, extents, axis, row);
}

}  // namespace rlab::tensor
