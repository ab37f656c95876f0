#include "ttlearn/tt.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "ttlearn/svd.hpp"

namespace ttlearn {

namespace {

constexpr std::size_t kDenseSiteLimit = 14;

void validate_train(const std::vector<DenseTensor>& cores,
                    std::size_t n_physical_axes, const char* what) {
  const std::string name(what);
  if (cores.empty()) {
    throw shape_error(name + ": no cores");
  }
  const std::size_t core_rank = 2 + n_physical_axes;
  for (std::size_t n = 0; n < cores.size(); ++n) {
    const auto& sh = cores[n].shape();
    if (sh.size() != core_rank) {
      throw shape_error(name + ": core " + std::to_string(n) +
                        " has wrong rank");
    }
    for (std::size_t p = 0; p < n_physical_axes; ++p) {
      if (sh[1 + p] != 2) {
        throw shape_error(name + ": core " + std::to_string(n) +
                          " physical extent must be 2");
      }
    }
    if (n + 1 < cores.size() && sh.back() != cores[n + 1].shape().front()) {
      throw shape_error(name + ": bond mismatch between cores " +
                        std::to_string(n) + " and " + std::to_string(n + 1));
    }
  }
  if (cores.front().shape().front() != 1 || cores.back().shape().back() != 1) {
    throw shape_error(name + ": boundary ranks must be 1");
  }
}

std::vector<std::size_t> ranks_of(const std::vector<DenseTensor>& cores) {
  std::vector<std::size_t> r;
  r.reserve(cores.size() + 1);
  r.push_back(cores.front().shape().front());
  for (const auto& c : cores) {
    r.push_back(c.shape().back());
  }
  return r;
}

void check_equal_sites(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw shape_error(std::string(what) + ": operand site counts differ (" +
                      std::to_string(a) + " vs " + std::to_string(b) + ")");
  }
}

// Rows 0..k-1 of a matrix.
DenseTensor take_rows(const DenseTensor& m, std::size_t k) {
  const std::size_t cols = m.shape()[1];
  DenseTensor r({k, cols});
  std::copy(m.data(), m.data() + k * cols, r.data());
  return r;
}

// Columns 0..k-1 of a matrix, scaled columnwise by weights.
DenseTensor take_cols_scaled(const DenseTensor& m, std::size_t k,
                             const std::vector<double>& w) {
  const std::size_t rows = m.shape()[0];
  const std::size_t cols = m.shape()[1];
  DenseTensor r({rows, k});
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      r[i * k + j] = m[i * cols + j] * w[j];
    }
  }
  return r;
}

}  // namespace

std::vector<std::size_t> Mps::bond_ranks() const { return ranks_of(cores); }
std::vector<std::size_t> Mpo::bond_ranks() const { return ranks_of(cores); }

std::size_t Mps::max_bond_rank() const {
  std::size_t m = 0;
  for (std::size_t r : bond_ranks()) {
    m = std::max(m, r);
  }
  return m;
}

std::size_t Mpo::max_bond_rank() const {
  std::size_t m = 0;
  for (std::size_t r : bond_ranks()) {
    m = std::max(m, r);
  }
  return m;
}

void Mps::validate() const { validate_train(cores, 1, "mps"); }
void Mpo::validate() const { validate_train(cores, 2, "mpo"); }

Mps product_state(const std::vector<std::array<cplx, 2>>& site_vectors) {
  if (site_vectors.empty()) {
    throw shape_error("product_state: need at least one site");
  }
  Mps s;
  s.cores.reserve(site_vectors.size());
  for (const auto& v : site_vectors) {
    DenseTensor c({1, 2, 1});
    c[0] = v[0];
    c[1] = v[1];
    s.cores.push_back(std::move(c));
  }
  return s;
}

Mpo identity_mpo(std::size_t n_sites) {
  if (n_sites == 0) {
    throw shape_error("identity_mpo: need at least one site");
  }
  Mpo o;
  o.cores.reserve(n_sites);
  for (std::size_t n = 0; n < n_sites; ++n) {
    DenseTensor c({1, 2, 2, 1});
    c.at({0, 0, 0, 0}) = 1.0;
    c.at({0, 1, 1, 0}) = 1.0;
    o.cores.push_back(std::move(c));
  }
  return o;
}

Mpo adjointed(const Mpo& o) {
  Mpo r;
  r.cores.reserve(o.cores.size());
  for (const auto& c : o.cores) {
    r.cores.push_back(conj(transposed(c, {0, 2, 1, 3})));
  }
  return r;
}

namespace {

template <typename Train>
Train scaled_geometric_impl(const Train& t, double alpha, const char* what) {
  if (alpha < 0.0) {
    throw shape_error(std::string(what) + ": alpha must be >= 0");
  }
  const double f = std::pow(alpha, 1.0 / static_cast<double>(t.n_sites()));
  Train r = t;
  for (auto& c : r.cores) {
    c *= f;
  }
  return r;
}

}  // namespace

Mpo scaled_geometric(const Mpo& o, double alpha) {
  return scaled_geometric_impl(o, alpha, "mpo scale");
}

Mps scaled_geometric(const Mps& s, double alpha) {
  return scaled_geometric_impl(s, alpha, "mps scale");
}

DenseTensor mps_to_dense(const Mps& s) {
  s.validate();
  const std::size_t n = s.n_sites();
  if (n > kDenseSiteLimit) {
    throw capacity_error("mps_to_dense: refusing " + std::to_string(n) +
                         " sites (limit " + std::to_string(kDenseSiteLimit) +
                         ")");
  }
  DenseTensor acc = s.cores[0];  // (1, 2, r)
  for (std::size_t k = 1; k < n; ++k) {
    acc = contract(acc, s.cores[k], {{acc.rank() - 1, 0}});
  }
  return reshaped(acc, std::vector<std::size_t>(n, 2));
}

DenseTensor mpo_to_dense(const Mpo& o) {
  o.validate();
  const std::size_t n = o.n_sites();
  if (n > kDenseSiteLimit) {
    throw capacity_error("mpo_to_dense: refusing " + std::to_string(n) +
                         " sites (limit " + std::to_string(kDenseSiteLimit) +
                         ")");
  }
  DenseTensor acc = o.cores[0];  // (1, i, j, r)
  for (std::size_t k = 1; k < n; ++k) {
    acc = contract(acc, o.cores[k], {{acc.rank() - 1, 0}});
  }
  // acc axes: (1, i1, j1, i2, j2, ..., iN, jN, 1)
  acc = reshaped(acc, std::vector<std::size_t>(2 * n, 2));
  std::vector<std::size_t> perm;
  perm.reserve(2 * n);
  for (std::size_t k = 0; k < n; ++k) {
    perm.push_back(2 * k);
  }
  for (std::size_t k = 0; k < n; ++k) {
    perm.push_back(2 * k + 1);
  }
  return transposed(acc, perm);
}

Mpo mpo_multiply(const Mpo& a, const Mpo& b) {
  a.validate();
  b.validate();
  check_equal_sites(a.n_sites(), b.n_sites(), "mpo_multiply");
  Mpo r;
  r.cores.reserve(a.n_sites());
  for (std::size_t n = 0; n < a.n_sites(); ++n) {
    const auto& ca = a.cores[n];  // (al, i, j, ar)
    const auto& cb = b.cores[n];  // (bl, j, k, br)
    DenseTensor t = contract(ca, cb, {{2, 1}});  // (al, i, ar, bl, k, br)
    t = transposed(t, {0, 3, 1, 4, 2, 5});       // (al, bl, i, k, ar, br)
    const auto& sh = t.shape();
    r.cores.push_back(reshaped(t, {sh[0] * sh[1], 2, 2, sh[4] * sh[5]}));
  }
  return r;
}

Mpo mpo_add(const Mpo& a, const Mpo& b) {
  a.validate();
  b.validate();
  check_equal_sites(a.n_sites(), b.n_sites(), "mpo_add");
  const std::size_t n = a.n_sites();
  Mpo r;
  r.cores.reserve(n);
  if (n == 1) {
    DenseTensor c = a.cores[0];
    for (std::size_t f = 0; f < c.size(); ++f) {
      c[f] += b.cores[0][f];
    }
    r.cores.push_back(std::move(c));
    return r;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const auto& ca = a.cores[k];
    const auto& cb = b.cores[k];
    const std::size_t al = ca.shape()[0];
    const std::size_t ar = ca.shape()[3];
    const std::size_t bl = cb.shape()[0];
    const std::size_t br = cb.shape()[3];
    const std::size_t rl = (k == 0) ? 1 : al + bl;
    const std::size_t rr = (k == n - 1) ? 1 : ar + br;
    DenseTensor c({rl, 2, 2, rr});
    const std::size_t a_l_off = 0;
    const std::size_t b_l_off = (k == 0) ? 0 : al;
    const std::size_t a_r_off = 0;
    const std::size_t b_r_off = (k == n - 1) ? 0 : ar;
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t j = 0; j < 2; ++j) {
        for (std::size_t l = 0; l < al; ++l) {
          for (std::size_t rr2 = 0; rr2 < ar; ++rr2) {
            c.at({a_l_off + l, i, j, a_r_off + rr2}) = ca.at({l, i, j, rr2});
          }
        }
        for (std::size_t l = 0; l < bl; ++l) {
          for (std::size_t rr2 = 0; rr2 < br; ++rr2) {
            c.at({b_l_off + l, i, j, b_r_off + rr2}) += cb.at({l, i, j, rr2});
          }
        }
      }
    }
    r.cores.push_back(std::move(c));
  }
  return r;
}

cplx mpo_trace(const Mpo& o) {
  o.validate();
  std::vector<cplx> v{1.0};
  for (const auto& c : o.cores) {
    const std::size_t l = c.shape()[0];
    const std::size_t r = c.shape()[3];
    std::vector<cplx> w(r, cplx{});
    for (std::size_t a = 0; a < l; ++a) {
      if (v[a] == cplx{}) {
        continue;
      }
      for (std::size_t b = 0; b < r; ++b) {
        w[b] += v[a] * (c.at({a, 0, 0, b}) + c.at({a, 1, 1, b}));
      }
    }
    v = std::move(w);
  }
  return v[0];
}

cplx mps_inner(const Mps& bra, const Mps& ket) {
  bra.validate();
  ket.validate();
  check_equal_sites(bra.n_sites(), ket.n_sites(), "mps_inner");
  DenseTensor l({1, 1});
  l[0] = 1.0;
  for (std::size_t n = 0; n < bra.n_sites(); ++n) {
    // l: (p, q) with p the conjugated chain
    DenseTensor t = contract(l, conj(bra.cores[n]), {{0, 0}});  // (q, i, p')
    l = contract(t, ket.cores[n], {{0, 0}, {1, 1}});            // (p', q')
  }
  return l[0];
}

cplx sandwich(const Mps& phi, const Mpo& o) {
  phi.validate();
  o.validate();
  check_equal_sites(phi.n_sites(), o.n_sites(), "sandwich");
  DenseTensor l({1, 1, 1});
  l[0] = 1.0;
  for (std::size_t n = 0; n < phi.n_sites(); ++n) {
    // l: (p, a, q) = (conjugated bra bond, operator bond, ket bond)
    DenseTensor t = contract(l, conj(phi.cores[n]), {{0, 0}});  // (a, q, i, p')
    t = contract(t, o.cores[n], {{0, 0}, {2, 1}});              // (q, p', j, a')
    l = contract(t, phi.cores[n], {{0, 0}, {2, 1}});            // (p', a', q')
  }
  return l[0];
}

Mps apply_mpo_to_mps(const Mpo& o, const Mps& s) {
  o.validate();
  s.validate();
  check_equal_sites(o.n_sites(), s.n_sites(), "apply_mpo_to_mps");
  Mps r;
  r.cores.reserve(s.n_sites());
  for (std::size_t n = 0; n < s.n_sites(); ++n) {
    const auto& co = o.cores[n];                 // (a, i, j, a')
    const auto& cs = s.cores[n];                 // (q, j, q')
    DenseTensor t = contract(co, cs, {{2, 1}});  // (a, i, a', q, q')
    t = transposed(t, {0, 3, 1, 2, 4});          // (a, q, i, a', q')
    const auto& sh = t.shape();
    r.cores.push_back(reshaped(t, {sh[0] * sh[1], 2, sh[3] * sh[4]}));
  }
  return r;
}

Mpo truncate(const Mpo& o, std::size_t chi_max) {
  o.validate();
  if (chi_max < 1) {
    throw shape_error("truncate: chi_max must be >= 1");
  }
  const std::size_t n = o.n_sites();
  // 3-axis working view (left, fused physical, right).
  std::vector<DenseTensor> work;
  work.reserve(n);
  for (const auto& c : o.cores) {
    work.push_back(
        reshaped(c, {c.shape()[0], std::size_t{4}, c.shape()[3]}));
  }

  // Left-to-right orthogonalization; lossless.
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const std::size_t l = work[k].shape()[0];
    const std::size_t r = work[k].shape()[2];
    SvdResult f = svd(reshaped(work[k], {l * 4, r}));
    const std::size_t kept = f.s.size();
    work[k] = reshaped(f.u, {l, 4, kept});
    DenseTensor carry = f.vh;  // (kept, r)
    for (std::size_t i = 0; i < kept; ++i) {
      for (std::size_t j = 0; j < r; ++j) {
        carry[i * r + j] *= f.s[i];
      }
    }
    work[k + 1] = contract(carry, work[k + 1], {{1, 0}});
  }

  // Right-to-left rank truncation.
  for (std::size_t k = n; k-- > 1;) {
    const std::size_t l = work[k].shape()[0];
    const std::size_t r = work[k].shape()[2];
    SvdResult f = svd(reshaped(work[k], {l, 4 * r}));
    const std::size_t kept = std::min(chi_max, f.s.size());
    work[k] = reshaped(take_rows(f.vh, kept), {kept, 4, r});
    const DenseTensor carry = take_cols_scaled(f.u, kept, f.s);  // (l, kept)
    work[k - 1] = contract(work[k - 1], carry, {{2, 0}});
  }

  Mpo out;
  out.cores.reserve(n);
  for (auto& w : work) {
    out.cores.push_back(
        reshaped(w, {w.shape()[0], 2, 2, w.shape()[2]}));
  }
  return out;
}

}  // namespace ttlearn
