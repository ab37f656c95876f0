#include "ttlearn/kernels.hpp"

#include <cstring>

namespace ttlearn::kernels {

namespace {

void matmul_ref(const cplx* a, const cplx* b, cplx* c, std::size_t m,
                std::size_t k, std::size_t n, bool accumulate) {
  if (!accumulate) {
    std::memset(static_cast<void*>(c), 0, m * n * sizeof(cplx));
  }
  for (std::size_t i = 0; i < m; ++i) {
    const cplx* arow = a + i * k;
    cplx* crow = c + i * n;
    for (std::size_t p = 0; p < k; ++p) {
      const cplx av = arow[p];
      const cplx* brow = b + p * n;
      for (std::size_t j = 0; j < n; ++j) {
        crow[j] += av * brow[j];
      }
    }
  }
}

void axpy_ref(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    y[i] += alpha * x[i];
  }
}

void scale_ref(cplx alpha, cplx* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    x[i] *= alpha;
  }
}

cplx dot_conj_ref(const cplx* x, const cplx* y, std::size_t n) {
  double re = 0.0;
  double im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    re += x[i].real() * y[i].real() + x[i].imag() * y[i].imag();
    im += x[i].real() * y[i].imag() - x[i].imag() * y[i].real();
  }
  return {re, im};
}

double norm_sq_ref(const cplx* x, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    acc += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
  }
  return acc;
}

}  // namespace

const Backend& reference() {
  static const Backend backend{"scalar",   matmul_ref,   axpy_ref,
                               scale_ref,  dot_conj_ref, norm_sq_ref};
  return backend;
}

}  // namespace ttlearn::kernels
