#include "kernels_impl.hpp"

namespace cyclosc::kernels::scalar {

void gemm(const cplx* a, const cplx* b, cplx* c, std::size_t n) {
  for (std::size_t i = 0; i < n * n; ++i) c[i] = 0.0;
  // i-k-j order so the inner loop walks rows of b and c.
  for (std::size_t i = 0; i < n; ++i) {
    cplx* crow = c + i * n;
    for (std::size_t k = 0; k < n; ++k) {
      const cplx aik = a[i * n + k];
      if (aik == 0.0) continue;
      const cplx* brow = b + k * n;
      for (std::size_t j = 0; j < n; ++j) {
        const double re = aik.real() * brow[j].real() - aik.imag() * brow[j].imag();
        const double im = aik.real() * brow[j].imag() + aik.imag() * brow[j].real();
        crow[j] += cplx(re, im);
      }
    }
  }
}

void axpy(cplx alpha, const cplx* x, cplx* y, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) {
    const double re = alpha.real() * x[i].real() - alpha.imag() * x[i].imag();
    const double im = alpha.real() * x[i].imag() + alpha.imag() * x[i].real();
    y[i] += cplx(re, im);
  }
}

double diff_norm_sq(const cplx* a, const cplx* b, std::size_t n, std::size_t ncols) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < ncols; ++j) {
      const double dr = a[i * n + j].real() - b[i * n + j].real();
      const double di = a[i * n + j].imag() - b[i * n + j].imag();
      acc += dr * dr + di * di;
    }
  }
  return acc;
}

}  // namespace cyclosc::kernels::scalar
