#pragma once

// Dense complex kernels behind every operator product and residual norm.
//
// Each kernel has a scalar reference implementation and, when the build and
// the host CPU allow it, a SIMD variant (AVX2+FMA on x86-64, NEON on
// AArch64). The variant is chosen once at first use; tests can force a
// backend to compare both paths.

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>

namespace cyclosc::kernels {

using cplx = std::complex<double>;

enum class Backend { Scalar, Avx2, Neon };

std::string_view backend_name(Backend b);

// Backend in use for dispatched calls.
Backend active_backend();

// Best backend supported by this binary on this CPU.
Backend detected_backend();

// True if `b` was compiled in and the CPU supports it.
bool backend_available(Backend b);

// Force a backend; throws std::invalid_argument if unavailable.
void set_backend(Backend b);

// c = a * b for n x n row-major matrices. `c` must not alias `a` or `b`.
void gemm(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> c, std::size_t n);

// y += alpha * x
void axpy(cplx alpha, std::span<const cplx> x, std::span<cplx> y);

// Sum of |a(i,j) - b(i,j)|^2 over all rows i and columns j < ncols of
// n x n row-major matrices.
double diff_norm_sq(std::span<const cplx> a, std::span<const cplx> b, std::size_t n, std::size_t ncols);

// Per-backend function table, used by the equivalence tests and benchmarks.
struct KernelTable {
  void (*gemm)(const cplx* a, const cplx* b, cplx* c, std::size_t n);
  void (*axpy)(cplx alpha, const cplx* x, cplx* y, std::size_t len);
  double (*diff_norm_sq)(const cplx* a, const cplx* b, std::size_t n, std::size_t ncols);
};

// nullptr when `b` is not available on this build/CPU.
const KernelTable* table_for(Backend b);

}  // namespace cyclosc::kernels
