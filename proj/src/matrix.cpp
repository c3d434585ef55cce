#include "cyclosc/matrix.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace cyclosc {

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::diagonal(std::span<const double> diag) {
  CMatrix m(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

CMatrix CMatrix::diagonal(std::span<const cplx> diag) {
  CMatrix m(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

CMatrix CMatrix::adjoint() const {
  CMatrix out(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

CMatrix& CMatrix::operator+=(const CMatrix& other) { return add_scaled(1.0, other); }

CMatrix& CMatrix::operator-=(const CMatrix& other) { return add_scaled(-1.0, other); }

CMatrix& CMatrix::operator*=(cplx s) {
  for (auto& v : data_) v *= s;
  return *this;
}

CMatrix& CMatrix::add_scaled(cplx s, const CMatrix& other) {
  assert(n_ == other.n_);
  kernels::axpy(s, other.data_, data_);
  return *this;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  assert(a.dim() == b.dim());
  CMatrix c(a.dim());
  kernels::gemm(a.data(), b.data(), c.data(), a.dim());
  return c;
}

CMatrix power(const CMatrix& a, unsigned k) {
  CMatrix out = CMatrix::identity(a.dim());
  for (unsigned i = 0; i < k; ++i) out = out * a;
  return out;
}

double residual_norm(const CMatrix& a, const CMatrix& b, std::size_t ncols) {
  assert(a.dim() == b.dim() && ncols <= a.dim());
  return std::sqrt(kernels::diff_norm_sq(a.data(), b.data(), a.dim(), ncols));
}

double column_norm(const CMatrix& a, std::size_t ncols) {
  return residual_norm(a, CMatrix(a.dim()), ncols);
}

double max_abs_diff(const CMatrix& a, const CMatrix& b, std::size_t m) {
  assert(a.dim() == b.dim() && m <= a.dim());
  double worst = 0.0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
  return worst;
}

double hermiticity_error(const CMatrix& a) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) worst = std::max(worst, std::abs(a(i, j) - std::conj(a(j, i))));
  return worst;
}

}  // namespace cyclosc
