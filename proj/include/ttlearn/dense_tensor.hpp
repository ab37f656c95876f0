#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "ttlearn/errors.hpp"

namespace ttlearn {

using cplx = std::complex<double>;

// Dense complex tensor in row-major order. An empty shape denotes a rank-0
// scalar holding exactly one entry.
class DenseTensor {
 public:
  DenseTensor() : data_(1) {}
  explicit DenseTensor(std::vector<std::size_t> shape);
  DenseTensor(std::vector<std::size_t> shape, std::vector<cplx> data);

  const std::vector<std::size_t>& shape() const { return shape_; }
  std::size_t rank() const { return shape_.size(); }
  std::size_t size() const { return data_.size(); }
  std::size_t extent(std::size_t axis) const { return shape_[axis]; }

  cplx* data() { return data_.data(); }
  const cplx* data() const { return data_.data(); }
  cplx& operator[](std::size_t flat) { return data_[flat]; }
  const cplx& operator[](std::size_t flat) const { return data_[flat]; }

  std::size_t flat_index(std::initializer_list<std::size_t> idx) const;
  cplx& at(std::initializer_list<std::size_t> idx) {
    return data_[flat_index(idx)];
  }
  const cplx& at(std::initializer_list<std::size_t> idx) const {
    return data_[flat_index(idx)];
  }

  double norm() const;  // Frobenius
  DenseTensor& operator*=(cplx alpha);

 private:
  std::vector<std::size_t> shape_;
  std::vector<cplx> data_;
};

DenseTensor conj(const DenseTensor& a);

// Row-major strides of a shape.
std::vector<std::size_t> strides_of(const std::vector<std::size_t>& shape);

// Axis permutation: result axis k is input axis permutation[k].
DenseTensor transposed(const DenseTensor& a,
                       const std::vector<std::size_t>& permutation);

// Size-preserving relabeling of the row-major layout.
DenseTensor reshaped(const DenseTensor& a, std::vector<std::size_t> new_shape);

// Permute axes, then merge consecutive permuted axes into groups. An empty
// group list keeps every axis separate. Groups index positions in the
// permuted order and must partition them contiguously and in order.
DenseTensor reindex(const DenseTensor& a,
                    const std::vector<std::size_t>& permutation,
                    const std::vector<std::vector<std::size_t>>& regrouping);

// Sum over the paired axes of the entrywise product. Result axes are the
// unpaired axes of a (in order) followed by the unpaired axes of b.
DenseTensor contract(
    const DenseTensor& a, const DenseTensor& b,
    const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

}  // namespace ttlearn
