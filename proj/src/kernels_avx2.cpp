#include "ttlearn/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cstring>

namespace ttlearn::kernels {

namespace {

// One __m256d holds two complex doubles as [re0, im0, re1, im1].

// acc += w * v for a complex scalar w broadcast over the vector v.
inline __m256d cmadd(__m256d wr, __m256d wi, __m256d v, __m256d acc) {
  const __m256d vswap = _mm256_permute_pd(v, 0x5);  // [im0, re0, im1, re1]
  // even lanes: wr*re - wi*im, odd lanes: wr*im + wi*re
  return _mm256_add_pd(acc, _mm256_fmaddsub_pd(wr, v, _mm256_mul_pd(wi, vswap)));
}

void matmul_avx2(const cplx* a, const cplx* b, cplx* c, std::size_t m,
                 std::size_t k, std::size_t n, bool accumulate) {
  if (!accumulate) {
    std::memset(static_cast<void*>(c), 0, m * n * sizeof(cplx));
  }
  const std::size_t n2 = n / 2 * 2;
  for (std::size_t i = 0; i < m; ++i) {
    const cplx* arow = a + i * k;
    double* crow = reinterpret_cast<double*>(c + i * n);
    for (std::size_t p = 0; p < k; ++p) {
      const __m256d wr = _mm256_set1_pd(arow[p].real());
      const __m256d wi = _mm256_set1_pd(arow[p].imag());
      const double* brow = reinterpret_cast<const double*>(b + p * n);
      std::size_t j = 0;
      for (; j < n2; j += 2) {
        const __m256d bv = _mm256_loadu_pd(brow + 2 * j);
        const __m256d cv = _mm256_loadu_pd(crow + 2 * j);
        _mm256_storeu_pd(crow + 2 * j, cmadd(wr, wi, bv, cv));
      }
      if (j < n) {
        const cplx prod = arow[p] * (b + p * n)[j];
        (c + i * n)[j] += prod;
      }
    }
  }
}

void axpy_avx2(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
  const __m256d wr = _mm256_set1_pd(alpha.real());
  const __m256d wi = _mm256_set1_pd(alpha.imag());
  const double* xd = reinterpret_cast<const double*>(x);
  double* yd = reinterpret_cast<double*>(y);
  const std::size_t n2 = n / 2 * 2;
  std::size_t i = 0;
  for (; i < n2; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
    const __m256d yv = _mm256_loadu_pd(yd + 2 * i);
    _mm256_storeu_pd(yd + 2 * i, cmadd(wr, wi, xv, yv));
  }
  for (; i < n; ++i) {
    y[i] += alpha * x[i];
  }
}

void scale_avx2(cplx alpha, cplx* x, std::size_t n) {
  const __m256d wr = _mm256_set1_pd(alpha.real());
  const __m256d wi = _mm256_set1_pd(alpha.imag());
  double* xd = reinterpret_cast<double*>(x);
  const std::size_t n2 = n / 2 * 2;
  std::size_t i = 0;
  for (; i < n2; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
    const __m256d xswap = _mm256_permute_pd(xv, 0x5);
    _mm256_storeu_pd(xd + 2 * i,
                     _mm256_fmaddsub_pd(wr, xv, _mm256_mul_pd(wi, xswap)));
  }
  for (; i < n; ++i) {
    x[i] *= alpha;
  }
}

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

cplx dot_conj_avx2(const cplx* x, const cplx* y, std::size_t n) {
  const double* xd = reinterpret_cast<const double*>(x);
  const double* yd = reinterpret_cast<const double*>(y);
  // Flip the sign of imaginary lanes of x: conj(x)*y has
  // re = xr*yr + xi*yi (plain lane product) and im = xr*yi - xi*yr
  // (swapped lanes with the xi term negated).
  const __m256d imflip = _mm256_set_pd(1.0, -1.0, 1.0, -1.0);
  __m256d acc_re = _mm256_setzero_pd();
  __m256d acc_im = _mm256_setzero_pd();
  const std::size_t n2 = n / 2 * 2;
  std::size_t i = 0;
  for (; i < n2; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
    const __m256d yv = _mm256_loadu_pd(yd + 2 * i);
    acc_re = _mm256_fmadd_pd(xv, yv, acc_re);
    const __m256d xswap = _mm256_mul_pd(_mm256_permute_pd(xv, 0x5), imflip);
    acc_im = _mm256_fmadd_pd(xswap, yv, acc_im);
  }
  double re = hsum(acc_re);
  double im = hsum(acc_im);
  for (; i < n; ++i) {
    re += x[i].real() * y[i].real() + x[i].imag() * y[i].imag();
    im += x[i].real() * y[i].imag() - x[i].imag() * y[i].real();
  }
  return {re, im};
}

double norm_sq_avx2(const cplx* x, std::size_t n) {
  const double* xd = reinterpret_cast<const double*>(x);
  __m256d acc = _mm256_setzero_pd();
  const std::size_t n2 = n / 2 * 2;
  std::size_t i = 0;
  for (; i < n2; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
    acc = _mm256_fmadd_pd(xv, xv, acc);
  }
  double s = hsum(acc);
  for (; i < n; ++i) {
    s += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
  }
  return s;
}

}  // namespace

const Backend* avx2() {
  if (!__builtin_cpu_supports("avx2") || !__builtin_cpu_supports("fma")) {
    return nullptr;
  }
  static const Backend backend{"avx2",      matmul_avx2,   axpy_avx2,
                               scale_avx2,  dot_conj_avx2, norm_sq_avx2};
  return &backend;
}

}  // namespace ttlearn::kernels

#else

namespace ttlearn::kernels {

const Backend* avx2() { return nullptr; }

}  // namespace ttlearn::kernels

#endif
