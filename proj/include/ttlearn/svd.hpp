#pragma once

#include <vector>

#include "ttlearn/dense_tensor.hpp"

namespace ttlearn {

struct SvdResult {
  DenseTensor u;           // rows x k
  std::vector<double> s;   // k, non-increasing
  DenseTensor vh;          // k x cols
};

// Thin SVD of a rank-2 tensor via one-sided Jacobi, k = min(rows, cols).
// Deterministic and dependency-free; converges when no column pair exceeds
// the relative off-diagonal threshold 1e-14. Throws numeric_error with the
// sweep count if 10000 sweeps do not converge.
SvdResult svd(const DenseTensor& m);

}  // namespace ttlearn
