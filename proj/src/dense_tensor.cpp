#include "ttlearn/dense_tensor.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ttlearn/kernels.hpp"

namespace ttlearn {

namespace {

std::size_t checked_volume(const std::vector<std::size_t>& shape) {
  std::size_t v = 1;
  for (std::size_t e : shape) {
    if (e == 0) {
      throw shape_error("tensor extents must be >= 1");
    }
    v *= e;
  }
  return v;
}

}  // namespace

DenseTensor::DenseTensor(std::vector<std::size_t> shape)
    : shape_(std::move(shape)), data_(checked_volume(shape_)) {}

DenseTensor::DenseTensor(std::vector<std::size_t> shape, std::vector<cplx> data)
    : shape_(std::move(shape)), data_(std::move(data)) {
  if (checked_volume(shape_) != data_.size()) {
    throw shape_error("data length does not match shape volume");
  }
}

std::size_t DenseTensor::flat_index(
    std::initializer_list<std::size_t> idx) const {
  if (idx.size() != shape_.size()) {
    throw shape_error("multi-index rank mismatch");
  }
  std::size_t flat = 0;
  std::size_t axis = 0;
  for (std::size_t i : idx) {
    if (i >= shape_[axis]) {
      throw shape_error("multi-index out of range on axis " +
                        std::to_string(axis));
    }
    flat = flat * shape_[axis] + i;
    ++axis;
  }
  return flat;
}

double DenseTensor::norm() const {
  return std::sqrt(kernels::active().norm_sq(data_.data(), data_.size()));
}

DenseTensor& DenseTensor::operator*=(cplx alpha) {
  kernels::active().scale(alpha, data_.data(), data_.size());
  return *this;
}

DenseTensor conj(const DenseTensor& a) {
  DenseTensor r(a.shape());
  for (std::size_t i = 0; i < a.size(); ++i) {
    r[i] = std::conj(a[i]);
  }
  return r;
}

std::vector<std::size_t> strides_of(const std::vector<std::size_t>& shape) {
  std::vector<std::size_t> str(shape.size());
  std::size_t acc = 1;
  for (std::size_t d = shape.size(); d-- > 0;) {
    str[d] = acc;
    acc *= shape[d];
  }
  return str;
}

namespace {

void check_permutation(const std::vector<std::size_t>& perm, std::size_t rank) {
  if (perm.size() != rank) {
    throw shape_error("permutation length must equal tensor rank");
  }
  std::vector<bool> seen(rank, false);
  for (std::size_t p : perm) {
    if (p >= rank || seen[p]) {
      throw shape_error("invalid axis permutation");
    }
    seen[p] = true;
  }
}

}  // namespace

DenseTensor transposed(const DenseTensor& a,
                       const std::vector<std::size_t>& permutation) {
  check_permutation(permutation, a.rank());
  const std::size_t rank = a.rank();
  std::vector<std::size_t> rshape(rank);
  const std::vector<std::size_t> astr = strides_of(a.shape());
  std::vector<std::size_t> ostr(rank);
  for (std::size_t k = 0; k < rank; ++k) {
    rshape[k] = a.shape()[permutation[k]];
    ostr[k] = astr[permutation[k]];
  }
  DenseTensor r(rshape);
  std::vector<std::size_t> idx(rank, 0);
  std::size_t aoff = 0;
  for (std::size_t f = 0; f < r.size(); ++f) {
    r[f] = a[aoff];
    for (std::size_t d = rank; d-- > 0;) {
      ++idx[d];
      aoff += ostr[d];
      if (idx[d] < rshape[d]) {
        break;
      }
      aoff -= ostr[d] * rshape[d];
      idx[d] = 0;
    }
  }
  return r;
}

DenseTensor reshaped(const DenseTensor& a, std::vector<std::size_t> new_shape) {
  if (checked_volume(new_shape) != a.size()) {
    throw shape_error("reshape must preserve the number of entries");
  }
  return DenseTensor(std::move(new_shape),
                     std::vector<cplx>(a.data(), a.data() + a.size()));
}

DenseTensor reindex(const DenseTensor& a,
                    const std::vector<std::size_t>& permutation,
                    const std::vector<std::vector<std::size_t>>& regrouping) {
  DenseTensor t = transposed(a, permutation);
  if (regrouping.empty()) {
    return t;
  }
  std::size_t next = 0;
  std::vector<std::size_t> grouped;
  grouped.reserve(regrouping.size());
  for (const auto& group : regrouping) {
    if (group.empty()) {
      throw shape_error("regrouping groups must be non-empty");
    }
    std::size_t e = 1;
    for (std::size_t axis : group) {
      if (axis != next) {
        throw shape_error("regrouping must partition permuted axes in order");
      }
      e *= t.shape()[axis];
      ++next;
    }
    grouped.push_back(e);
  }
  if (next != t.rank()) {
    throw shape_error("regrouping must cover every axis");
  }
  return reshaped(t, std::move(grouped));
}

DenseTensor contract(
    const DenseTensor& a, const DenseTensor& b,
    const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  std::vector<bool> a_paired(a.rank(), false);
  std::vector<bool> b_paired(b.rank(), false);
  for (const auto& [ax, bx] : pairs) {
    if (ax >= a.rank() || bx >= b.rank()) {
      throw shape_error("contraction axis out of range");
    }
    if (a_paired[ax] || b_paired[bx]) {
      throw shape_error("contraction axis listed twice");
    }
    if (a.shape()[ax] != b.shape()[bx]) {
      throw shape_error("contracted axes have unequal extents");
    }
    a_paired[ax] = true;
    b_paired[bx] = true;
  }

  std::vector<std::size_t> perm_a;
  std::vector<std::size_t> rshape;
  std::size_t m = 1;
  for (std::size_t ax = 0; ax < a.rank(); ++ax) {
    if (!a_paired[ax]) {
      perm_a.push_back(ax);
      rshape.push_back(a.shape()[ax]);
      m *= a.shape()[ax];
    }
  }
  std::size_t k = 1;
  for (const auto& pr : pairs) {
    perm_a.push_back(pr.first);
    k *= a.shape()[pr.first];
  }

  std::vector<std::size_t> perm_b;
  for (const auto& pr : pairs) {
    perm_b.push_back(pr.second);
  }
  std::size_t n = 1;
  for (std::size_t bx = 0; bx < b.rank(); ++bx) {
    if (!b_paired[bx]) {
      perm_b.push_back(bx);
      rshape.push_back(b.shape()[bx]);
      n *= b.shape()[bx];
    }
  }

  const DenseTensor at = transposed(a, perm_a);
  const DenseTensor bt = transposed(b, perm_b);
  DenseTensor r(rshape);
  kernels::active().matmul(at.data(), bt.data(), r.data(), m, k, n, false);
  return r;
}

}  // namespace ttlearn
