#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "cyclosc/kernels.hpp"

namespace cyclosc {

using cplx = std::complex<double>;

// Dense square complex matrix, row-major. Products and norms go through the
// dispatched kernels.
class CMatrix {
 public:
  CMatrix() = default;
  explicit CMatrix(std::size_t n) : n_(n), data_(n * n) {}

  static CMatrix identity(std::size_t n);
  static CMatrix diagonal(std::span<const double> diag);
  static CMatrix diagonal(std::span<const cplx> diag);

  std::size_t dim() const { return n_; }

  cplx& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  std::span<cplx> data() { return data_; }
  std::span<const cplx> data() const { return data_; }

  CMatrix adjoint() const;

  CMatrix& operator+=(const CMatrix& other);
  CMatrix& operator-=(const CMatrix& other);
  CMatrix& operator*=(cplx s);

  // this += s * other
  CMatrix& add_scaled(cplx s, const CMatrix& other);

  friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
  friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
  friend CMatrix operator*(CMatrix a, cplx s) { return a *= s; }
  friend CMatrix operator*(cplx s, CMatrix a) { return a *= s; }
  friend CMatrix operator*(const CMatrix& a, const CMatrix& b);

  bool operator==(const CMatrix& other) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<cplx> data_;
};

CMatrix power(const CMatrix& a, unsigned k);
inline CMatrix commutator(const CMatrix& a, const CMatrix& b) { return a * b - b * a; }
inline CMatrix anticommutator(const CMatrix& a, const CMatrix& b) { return a * b + b * a; }

// Frobenius norm of (a - b) over all rows and the leading `ncols` columns.
double residual_norm(const CMatrix& a, const CMatrix& b, std::size_t ncols);

// Frobenius norm of `a` over the leading `ncols` columns.
double column_norm(const CMatrix& a, std::size_t ncols);

// Largest |a(i,j) - b(i,j)| with i, j < m.
double max_abs_diff(const CMatrix& a, const CMatrix& b, std::size_t m);

// Largest |a(i,j) - conj(a(j,i))|.
double hermiticity_error(const CMatrix& a);

}  // namespace cyclosc
