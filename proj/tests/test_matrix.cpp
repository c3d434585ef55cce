#include <cmath>
#include <random>

#include "doctest.h"

#include "cyclosc/matrix.hpp"

using namespace cyclosc;

namespace {

CMatrix random_matrix(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> d;
  CMatrix m(n);
  for (auto& x : m.data()) x = cplx(d(rng), d(rng));
  return m;
}

}  // namespace

TEST_CASE("identity and diagonal") {
  const CMatrix i = CMatrix::identity(3);
  CHECK(i(0, 0) == cplx(1.0));
  CHECK(i(0, 1) == cplx(0.0));
  const std::vector<double> d{1.0, 2.0, 3.0};
  const CMatrix m = CMatrix::diagonal(d);
  CHECK(m(2, 2) == cplx(3.0));
  CHECK(hermiticity_error(m) == 0.0);
}

TEST_CASE("product is associative and distributes") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const auto a = random_matrix(rng, 7), b = random_matrix(rng, 7), c = random_matrix(rng, 7);
    CHECK(max_abs_diff((a * b) * c, a * (b * c), 7) < 1e-11);
    CHECK(max_abs_diff(a * (b + c), a * b + a * c, 7) < 1e-11);
    CHECK(max_abs_diff((a * b).adjoint(), b.adjoint() * a.adjoint(), 7) < 1e-11);
  }
}

TEST_CASE("commutator identities") {
  std::mt19937_64 rng(12);
  const auto a = random_matrix(rng, 5), b = random_matrix(rng, 5), c = random_matrix(rng, 5);
  const CMatrix jacobi = commutator(a, commutator(b, c)) + commutator(b, commutator(c, a)) +
                         commutator(c, commutator(a, b));
  CHECK(column_norm(jacobi, 5) < 1e-11);
  CHECK(max_abs_diff(anticommutator(a, b), anticommutator(b, a), 5) < 1e-12);
}

TEST_CASE("power and norms") {
  std::mt19937_64 rng(13);
  const auto a = random_matrix(rng, 4);
  CHECK(power(a, 0) == CMatrix::identity(4));
  CHECK(max_abs_diff(power(a, 3), a * a * a, 4) < 1e-12);

  CMatrix z(3);
  z(0, 2) = cplx(3.0, 4.0);
  z(1, 0) = 1.0;
  CHECK(column_norm(z, 2) == doctest::Approx(1.0));
  CHECK(column_norm(z, 3) == doctest::Approx(std::sqrt(26.0)));
  CHECK(residual_norm(z, CMatrix(3), 3) == doctest::Approx(std::sqrt(26.0)));
  CHECK(max_abs_diff(z, CMatrix(3), 2) == doctest::Approx(1.0));
  CHECK(hermiticity_error(z) == doctest::Approx(5.0));
}

TEST_CASE("add_scaled and scalar multiply") {
  CMatrix a = CMatrix::identity(2);
  a.add_scaled(cplx(0.0, 2.0), CMatrix::identity(2));
  CHECK(a(1, 1) == cplx(1.0, 2.0));
  a *= cplx(0.0, 1.0);
  CHECK(a(0, 0) == cplx(-2.0, 1.0));
}
