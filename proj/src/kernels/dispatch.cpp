#include <atomic>
#include <cassert>
#include <stdexcept>
#include <string>

#include "kernels_impl.hpp"

namespace cyclosc::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(CYCLOSC_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

bool cpu_has_neon() {
#if defined(CYCLOSC_HAVE_NEON)
  return true;  // Advanced SIMD is mandatory on AArch64.
#else
  return false;
#endif
}

Backend detect() {
  if (cpu_has_avx2()) return Backend::Avx2;
  if (cpu_has_neon()) return Backend::Neon;
  return Backend::Scalar;
}

std::atomic<Backend>& current() {
  static std::atomic<Backend> b{detect()};
  return b;
}

}  // namespace

std::string_view backend_name(Backend b) {
  switch (b) {
    case Backend::Scalar: return "scalar";
    case Backend::Avx2: return "avx2";
    case Backend::Neon: return "neon";
  }
  return "unknown";
}

Backend active_backend() { return current().load(std::memory_order_relaxed); }

Backend detected_backend() { return detect(); }

bool backend_available(Backend b) {
  switch (b) {
    case Backend::Scalar: return true;
    case Backend::Avx2: return cpu_has_avx2();
    case Backend::Neon: return cpu_has_neon();
  }
  return false;
}

void set_backend(Backend b) {
  if (!backend_available(b)) {
    throw std::invalid_argument("kernel backend not available: " + std::string(backend_name(b)));
  }
  current().store(b, std::memory_order_relaxed);
}

const KernelTable* table_for(Backend b) {
  static constexpr KernelTable scalar_table{&scalar::gemm, &scalar::axpy, &scalar::diff_norm_sq};
#if defined(CYCLOSC_HAVE_AVX2)
  static constexpr KernelTable avx2_table{&avx2::gemm, &avx2::axpy, &avx2::diff_norm_sq};
#endif
#if defined(CYCLOSC_HAVE_NEON)
  static constexpr KernelTable neon_table{&neon::gemm, &neon::axpy, &neon::diff_norm_sq};
#endif
  if (!backend_available(b)) return nullptr;
  switch (b) {
    case Backend::Scalar: return &scalar_table;
#if defined(CYCLOSC_HAVE_AVX2)
    case Backend::Avx2: return &avx2_table;
#endif
#if defined(CYCLOSC_HAVE_NEON)
    case Backend::Neon: return &neon_table;
#endif
    default: return nullptr;
  }
}

void gemm(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> c, std::size_t n) {
  assert(a.size() >= n * n && b.size() >= n * n && c.size() >= n * n);
  switch (active_backend()) {
#if defined(CYCLOSC_HAVE_AVX2)
    case Backend::Avx2: return avx2::gemm(a.data(), b.data(), c.data(), n);
#endif
#if defined(CYCLOSC_HAVE_NEON)
    case Backend::Neon: return neon::gemm(a.data(), b.data(), c.data(), n);
#endif
    default: return scalar::gemm(a.data(), b.data(), c.data(), n);
  }
}

void axpy(cplx alpha, std::span<const cplx> x, std::span<cplx> y) {
  assert(x.size() == y.size());
  switch (active_backend()) {
#if defined(CYCLOSC_HAVE_AVX2)
    case Backend::Avx2: return avx2::axpy(alpha, x.data(), y.data(), x.size());
#endif
#if defined(CYCLOSC_HAVE_NEON)
    case Backend::Neon: return neon::axpy(alpha, x.data(), y.data(), x.size());
#endif
    default: return scalar::axpy(alpha, x.data(), y.data(), x.size());
  }
}

double diff_norm_sq(std::span<const cplx> a, std::span<const cplx> b, std::size_t n, std::size_t ncols) {
  assert(a.size() >= n * n && b.size() >= n * n && ncols <= n);
  switch (active_backend()) {
#if defined(CYCLOSC_HAVE_AVX2)
    case Backend::Avx2: return avx2::diff_norm_sq(a.data(), b.data(), n, ncols);
#endif
#if defined(CYCLOSC_HAVE_NEON)
    case Backend::Neon: return neon::diff_norm_sq(a.data(), b.data(), n, ncols);
#endif
    default: return scalar::diff_norm_sq(a.data(), b.data(), n, ncols);
  }
}

}  // namespace cyclosc::kernels
