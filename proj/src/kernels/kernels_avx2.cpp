// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.
#include <immintrin.h>

#include "kernels_impl.hpp"

namespace cyclosc::kernels::avx2 {

namespace {

// (ar + i ai) * v for two packed complex numbers v = [r0 i0 r1 i1].
inline __m256d cmul_bcast(__m256d ar, __m256d ai, __m256d v) {
  const __m256d swapped = _mm256_permute_pd(v, 0b0101);
  return _mm256_fmaddsub_pd(ar, v, _mm256_mul_pd(ai, swapped));
}

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

}  // namespace

void gemm(const cplx* a, const cplx* b, cplx* c, std::size_t n) {
  auto* cd = reinterpret_cast<double*>(c);
  const auto* bd = reinterpret_cast<const double*>(b);
  for (std::size_t i = 0; i < 2 * n * n; ++i) cd[i] = 0.0;
  const std::size_t pairs = n / 2;
  for (std::size_t i = 0; i < n; ++i) {
    double* crow = cd + 2 * i * n;
    for (std::size_t k = 0; k < n; ++k) {
      const cplx aik = a[i * n + k];
      if (aik == 0.0) continue;
      const __m256d ar = _mm256_set1_pd(aik.real());
      const __m256d ai = _mm256_set1_pd(aik.imag());
      const double* brow = bd + 2 * k * n;
      for (std::size_t jp = 0; jp < pairs; ++jp) {
        const __m256d bv = _mm256_loadu_pd(brow + 4 * jp);
        const __m256d cv = _mm256_loadu_pd(crow + 4 * jp);
        _mm256_storeu_pd(crow + 4 * jp, _mm256_add_pd(cv, cmul_bcast(ar, ai, bv)));
      }
      if (n % 2 != 0) {
        const std::size_t j = n - 1;
        const double br = brow[2 * j], bi = brow[2 * j + 1];
        crow[2 * j] += aik.real() * br - aik.imag() * bi;
        crow[2 * j + 1] += aik.real() * bi + aik.imag() * br;
      }
    }
  }
}

void axpy(cplx alpha, const cplx* x, cplx* y, std::size_t len) {
  const auto* xd = reinterpret_cast<const double*>(x);
  auto* yd = reinterpret_cast<double*>(y);
  const __m256d ar = _mm256_set1_pd(alpha.real());
  const __m256d ai = _mm256_set1_pd(alpha.imag());
  std::size_t i = 0;
  for (; i + 2 <= len; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
    const __m256d yv = _mm256_loadu_pd(yd + 2 * i);
    _mm256_storeu_pd(yd + 2 * i, _mm256_add_pd(yv, cmul_bcast(ar, ai, xv)));
  }
  for (; i < len; ++i) {
    yd[2 * i] += alpha.real() * xd[2 * i] - alpha.imag() * xd[2 * i + 1];
    yd[2 * i + 1] += alpha.real() * xd[2 * i + 1] + alpha.imag() * xd[2 * i];
  }
}

double diff_norm_sq(const cplx* a, const cplx* b, std::size_t n, std::size_t ncols) {
  const auto* ad = reinterpret_cast<const double*>(a);
  const auto* bd = reinterpret_cast<const double*>(b);
  __m256d acc = _mm256_setzero_pd();
  double tail = 0.0;
  const std::size_t width = 2 * ncols;
  for (std::size_t i = 0; i < n; ++i) {
    const double* ar = ad + 2 * i * n;
    const double* br = bd + 2 * i * n;
    std::size_t j = 0;
    for (; j + 4 <= width; j += 4) {
      const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(ar + j), _mm256_loadu_pd(br + j));
      acc = _mm256_fmadd_pd(d, d, acc);
    }
    for (; j < width; ++j) {
      const double d = ar[j] - br[j];
      tail += d * d;
    }
  }
  return hsum(acc) + tail;
}

}  // namespace cyclosc::kernels::avx2
