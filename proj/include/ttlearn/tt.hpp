#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "ttlearn/dense_tensor.hpp"

namespace ttlearn {

// Tensor train of a pure qubit state. Core n has extents
// (r_{n-1}, 2, r_n) with r_0 = r_N = 1.
struct Mps {
  std::vector<DenseTensor> cores;

  std::size_t n_sites() const { return cores.size(); }
  std::vector<std::size_t> bond_ranks() const;
  std::size_t max_bond_rank() const;
  void validate() const;
};

// Tensor train of a qubit operator. Core n has extents
// (r_{n-1}, 2, 2, r_n); physical axis order is (out, in).
struct Mpo {
  std::vector<DenseTensor> cores;

  std::size_t n_sites() const { return cores.size(); }
  std::vector<std::size_t> bond_ranks() const;
  std::size_t max_bond_rank() const;
  void validate() const;
};

Mps product_state(const std::vector<std::array<cplx, 2>>& site_vectors);
Mpo identity_mpo(std::size_t n_sites);

// Conjugate every core and swap its physical axes.
Mpo adjointed(const Mpo& o);

// Multiply every core by alpha^(1/N); represents alpha * o without
// concentrating the scale in one core. Requires alpha >= 0.
Mpo scaled_geometric(const Mpo& o, double alpha);
Mps scaled_geometric(const Mps& s, double alpha);

// Densification. Guarded at 14 sites. The MPS result has shape (2, ..., 2);
// the MPO result has the N "out" axes followed by the N "in" axes.
DenseTensor mps_to_dense(const Mps& s);
DenseTensor mpo_to_dense(const Mpo& o);

// Operator product a*b; output bond ranks are products of input ranks.
Mpo mpo_multiply(const Mpo& a, const Mpo& b);

// Operator sum via core-wise direct sum; interior output bonds are sums of
// input bonds, boundary bonds stay 1.
Mpo mpo_add(const Mpo& a, const Mpo& b);

cplx mpo_trace(const Mpo& o);

// <bra|ket> by zipper contraction.
cplx mps_inner(const Mps& bra, const Mps& ket);

// <phi|O|phi> by left-to-right zipper contraction; nothing dense is formed.
cplx sandwich(const Mps& phi, const Mpo& o);

Mps apply_mpo_to_mps(const Mpo& o, const Mps& s);

// TT-rounding: left-to-right orthogonalization sweep, then right-to-left SVD
// truncation keeping at most chi_max singular values per bond.
Mpo truncate(const Mpo& o, std::size_t chi_max);

}  // namespace ttlearn
