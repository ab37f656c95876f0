#include "ttlearn/svd.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace ttlearn {

namespace {

constexpr double kOffDiagTol = 1e-14;
constexpr int kMaxSweeps = 10000;

// Column-major workspace: columns are contiguous so Jacobi rotations touch
// unit-stride data.
struct ColMat {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<cplx> d;

  cplx* col(std::size_t j) { return d.data() + j * rows; }
  const cplx* col(std::size_t j) const { return d.data() + j * rows; }
};

ColMat to_colmajor(const DenseTensor& m) {
  ColMat g;
  g.rows = m.shape()[0];
  g.cols = m.shape()[1];
  g.d.resize(g.rows * g.cols);
  for (std::size_t i = 0; i < g.rows; ++i) {
    for (std::size_t j = 0; j < g.cols; ++j) {
      g.d[j * g.rows + i] = m[i * g.cols + j];
    }
  }
  return g;
}

double col_norm_sq(const ColMat& m, std::size_t j) {
  double s = 0.0;
  const cplx* c = m.col(j);
  for (std::size_t i = 0; i < m.rows; ++i) {
    s += std::norm(c[i]);
  }
  return s;
}

cplx col_dot_conj(const ColMat& m, std::size_t p, std::size_t q) {
  cplx s{};
  const cplx* cp = m.col(p);
  const cplx* cq = m.col(q);
  for (std::size_t i = 0; i < m.rows; ++i) {
    s += std::conj(cp[i]) * cq[i];
  }
  return s;
}

// [g_p, g_q] <- [g_p, g_q] * [[cs, sn*e], [-sn*conj(e), cs]]
void rotate_cols(ColMat& m, std::size_t p, std::size_t q, double cs, double sn,
                 cplx e) {
  cplx* cp = m.col(p);
  cplx* cq = m.col(q);
  const cplx se = sn * e;
  const cplx sec = sn * std::conj(e);
  for (std::size_t i = 0; i < m.rows; ++i) {
    const cplx gp = cp[i];
    const cplx gq = cq[i];
    cp[i] = cs * gp - sec * gq;
    cq[i] = se * gp + cs * gq;
  }
}

SvdResult svd_tall(const DenseTensor& m) {
  ColMat g = to_colmajor(m);
  const std::size_t rows = g.rows;
  const std::size_t cols = g.cols;

  ColMat v;
  v.rows = cols;
  v.cols = cols;
  v.d.assign(cols * cols, cplx{});
  for (std::size_t j = 0; j < cols; ++j) {
    v.col(j)[j] = 1.0;
  }

  bool converged = false;
  int sweeps = 0;
  while (sweeps < kMaxSweeps) {
    ++sweeps;
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < cols; ++p) {
      for (std::size_t q = p + 1; q < cols; ++q) {
        const double app = col_norm_sq(g, p);
        const double aqq = col_norm_sq(g, q);
        const cplx apq = col_dot_conj(g, p, q);
        const double off = std::abs(apq);
        if (off <= kOffDiagTol * std::sqrt(app * aqq)) {
          continue;
        }
        rotated = true;
        const double tau = (aqq - app) / (2.0 * off);
        const double t =
            (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::hypot(1.0, tau));
        const double cs = 1.0 / std::sqrt(1.0 + t * t);
        const double sn = cs * t;
        const cplx e = apq / off;
        rotate_cols(g, p, q, cs, sn, e);
        rotate_cols(v, p, q, cs, sn, e);
      }
    }
    if (!rotated) {
      converged = true;
      break;
    }
  }
  if (!converged) {
    throw numeric_error("svd: one-sided Jacobi did not converge after " +
                        std::to_string(sweeps) + " sweeps");
  }

  std::vector<double> s(cols);
  for (std::size_t j = 0; j < cols; ++j) {
    s[j] = std::sqrt(col_norm_sq(g, j));
  }
  std::vector<std::size_t> order(cols);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return s[a] > s[b]; });

  SvdResult r;
  r.s.resize(cols);
  r.u = DenseTensor({rows, cols});
  r.vh = DenseTensor({cols, cols});
  std::size_t deficient = 0;
  for (std::size_t j = 0; j < cols; ++j) {
    const std::size_t src = order[j];
    r.s[j] = s[src];
    for (std::size_t i = 0; i < cols; ++i) {
      r.vh[j * cols + i] = std::conj(v.col(src)[i]);
    }
    if (r.s[j] > 0.0) {
      const cplx* gc = g.col(src);
      const double inv = 1.0 / r.s[j];
      for (std::size_t i = 0; i < rows; ++i) {
        r.u[i * cols + j] = gc[i] * inv;
      }
    } else {
      ++deficient;
    }
  }

  // Exactly-zero singular values leave U columns undefined; fill them with a
  // Gram-Schmidt completion from the canonical basis so U stays orthonormal.
  if (deficient > 0) {
    const std::size_t first = cols - deficient;
    std::size_t candidate = 0;
    for (std::size_t j = first; j < cols; ++j) {
      std::vector<cplx> w(rows);
      for (; candidate < rows; ++candidate) {
        std::fill(w.begin(), w.end(), cplx{});
        w[candidate] = 1.0;
        for (std::size_t jj = 0; jj < j; ++jj) {
          cplx ov{};
          for (std::size_t i = 0; i < rows; ++i) {
            ov += std::conj(r.u[i * cols + jj]) * w[i];
          }
          for (std::size_t i = 0; i < rows; ++i) {
            w[i] -= ov * r.u[i * cols + jj];
          }
        }
        double nn = 0.0;
        for (const cplx& x : w) {
          nn += std::norm(x);
        }
        if (nn > 0.25) {
          const double inv = 1.0 / std::sqrt(nn);
          for (std::size_t i = 0; i < rows; ++i) {
            r.u[i * cols + j] = w[i] * inv;
          }
          ++candidate;
          break;
        }
      }
    }
  }
  return r;
}

}  // namespace

SvdResult svd(const DenseTensor& m) {
  if (m.rank() != 2) {
    throw shape_error("svd expects a rank-2 tensor");
  }
  const std::size_t rows = m.shape()[0];
  const std::size_t cols = m.shape()[1];
  if (rows >= cols) {
    return svd_tall(m);
  }
  // Wide input: factor the adjoint and swap the factors.
  DenseTensor mh({cols, rows});
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      mh[j * rows + i] = std::conj(m[i * cols + j]);
    }
  }
  SvdResult t = svd_tall(mh);
  const std::size_t k = t.s.size();
  SvdResult r;
  r.s = std::move(t.s);
  r.u = DenseTensor({rows, k});
  r.vh = DenseTensor({k, cols});
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      r.u[i * k + j] = std::conj(t.vh[j * rows + i]);
    }
  }
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < cols; ++i) {
      r.vh[j * cols + i] = std::conj(t.u[i * k + j]);
    }
  }
  return r;
}

}  // namespace ttlearn
