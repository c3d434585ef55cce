// AArch64 variant; built only on ARM hosts.
#include <arm_neon.h>

#include "kernels_impl.hpp"

namespace cyclosc::kernels::neon {

namespace {

// (ar + i ai) * v for one packed complex v = [re im].
inline float64x2_t cmul_bcast(float64x2_t ar, float64x2_t ai_signed, float64x2_t v) {
  const float64x2_t swapped = vextq_f64(v, v, 1);
  return vfmaq_f64(vmulq_f64(ar, v), ai_signed, swapped);
}

}  // namespace

void gemm(const cplx* a, const cplx* b, cplx* c, std::size_t n) {
  auto* cd = reinterpret_cast<double*>(c);
  const auto* bd = reinterpret_cast<const double*>(b);
  for (std::size_t i = 0; i < 2 * n * n; ++i) cd[i] = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double* crow = cd + 2 * i * n;
    for (std::size_t k = 0; k < n; ++k) {
      const cplx aik = a[i * n + k];
      if (aik == 0.0) continue;
      const float64x2_t ar = vdupq_n_f64(aik.real());
      const double sgn[2] = {-aik.imag(), aik.imag()};
      const float64x2_t ai = vld1q_f64(sgn);
      const double* brow = bd + 2 * k * n;
      for (std::size_t j = 0; j < n; ++j) {
        const float64x2_t cv = vld1q_f64(crow + 2 * j);
        vst1q_f64(crow + 2 * j, vaddq_f64(cv, cmul_bcast(ar, ai, vld1q_f64(brow + 2 * j))));
      }
    }
  }
}

void axpy(cplx alpha, const cplx* x, cplx* y, std::size_t len) {
  const auto* xd = reinterpret_cast<const double*>(x);
  auto* yd = reinterpret_cast<double*>(y);
  const float64x2_t ar = vdupq_n_f64(alpha.real());
  const double sgn[2] = {-alpha.imag(), alpha.imag()};
  const float64x2_t ai = vld1q_f64(sgn);
  for (std::size_t i = 0; i < len; ++i) {
    const float64x2_t yv = vld1q_f64(yd + 2 * i);
    vst1q_f64(yd + 2 * i, vaddq_f64(yv, cmul_bcast(ar, ai, vld1q_f64(xd + 2 * i))));
  }
}

double diff_norm_sq(const cplx* a, const cplx* b, std::size_t n, std::size_t ncols) {
  const auto* ad = reinterpret_cast<const double*>(a);
  const auto* bd = reinterpret_cast<const double*>(b);
  float64x2_t acc = vdupq_n_f64(0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < ncols; ++j) {
      const std::size_t off = 2 * (i * n + j);
      const float64x2_t d = vsubq_f64(vld1q_f64(ad + off), vld1q_f64(bd + off));
      acc = vfmaq_f64(acc, d, d);
    }
  }
  return vaddvq_f64(acc);
}

}  // namespace cyclosc::kernels::neon
