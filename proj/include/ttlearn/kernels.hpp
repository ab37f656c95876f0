#pragma once

#include <complex>
#include <cstddef>
#include <string>

namespace ttlearn::kernels {

using cplx = std::complex<double>;

// Complex double-precision array kernels. All matrices are row-major and
// contiguous. Every entry point exists as a scalar reference implementation
// and (on capable x86-64 hosts) an AVX2+FMA variant; the two are
// equivalence-tested against each other.
struct Backend {
  const char* name;
  // C (m x n) = A (m x k) * B (k x n); accumulate makes it C += A * B.
  void (*matmul)(const cplx* a, const cplx* b, cplx* c, std::size_t m,
                 std::size_t k, std::size_t n, bool accumulate);
  // y += alpha * x
  void (*axpy)(cplx alpha, const cplx* x, cplx* y, std::size_t n);
  // x *= alpha
  void (*scale)(cplx alpha, cplx* x, std::size_t n);
  // sum_i conj(x_i) * y_i
  cplx (*dot_conj)(const cplx* x, const cplx* y, std::size_t n);
  // sum_i |x_i|^2
  double (*norm_sq)(const cplx* x, std::size_t n);
};

const Backend& reference();

// AVX2+FMA backend; nullptr when the running CPU lacks support.
const Backend* avx2();

// Backend the library routes through. Selected once: the TTLEARN_KERNELS
// environment variable ("scalar" or "avx2") wins, otherwise the widest
// supported instruction set.
const Backend& active();

// Test hook; throws std::invalid_argument on unknown or unsupported name.
void force_backend(const std::string& name);

}  // namespace ttlearn::kernels
