#pragma once

#include "cyclosc/kernels.hpp"

namespace cyclosc::kernels {

namespace scalar {
void gemm(const cplx* a, const cplx* b, cplx* c, std::size_t n);
void axpy(cplx alpha, const cplx* x, cplx* y, std::size_t len);
double diff_norm_sq(const cplx* a, const cplx* b, std::size_t n, std::size_t ncols);
}  // namespace scalar

namespace avx2 {
void gemm(const cplx* a, const cplx* b, cplx* c, std::size_t n);
void axpy(cplx alpha, const cplx* x, cplx* y, std::size_t len);
double diff_norm_sq(const cplx* a, const cplx* b, std::size_t n, std::size_t ncols);
}  // namespace avx2

namespace neon {
void gemm(const cplx* a, const cplx* b, cplx* c, std::size_t n);
void axpy(cplx alpha, const cplx* x, cplx* y, std::size_t len);
double diff_norm_sq(const cplx* a, const cplx* b, std::size_t n, std::size_t ncols);
}  // namespace neon

}  // namespace cyclosc::kernels
