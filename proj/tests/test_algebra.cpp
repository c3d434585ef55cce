#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"

#include "cyclosc/algebra.hpp"
#include "cyclosc/errors.hpp"
#include "test_support.hpp"

using namespace cyclosc;

TEST_CASE("derived parameters") {
  const auto p = new_params(3, std::vector<double>{1.0, -0.5});
  CHECK(p.alpha() == std::vector<double>{1.0, -0.5, -0.5});
  CHECK(p.beta() == std::vector<double>{0.0, 1.0, 0.5});
  CHECK(p.gamma() == std::vector<double>{0.5, 0.75, 0.25});
  CHECK(p.alpha_head() == std::vector<double>{1.0, -0.5});
  CHECK(p.residue(-1) == 2);
  CHECK(p.alpha_at(5) == -0.5);
}

TEST_CASE("Fock condition") {
  CHECK_THROWS_AS(new_params(2, std::vector<double>{-1.0}), FockConditionViolated);
  CHECK_NOTHROW(new_params(2, std::vector<double>{-0.999}));
  try {
    new_params(3, std::vector<double>{0.5, -2.6});
    FAIL("expected FockConditionViolated");
  } catch (const FockConditionViolated& e) {
    CHECK(e.mu() == 2);
    CHECK(e.code() == "FockConditionViolated");
  }
  CHECK(fock_violation(std::vector<double>{0.0, 0.0, 0.0}) == std::nullopt);
  CHECK(fock_violation(std::vector<double>{-1.0, 1.0}) == 1);
}

TEST_CASE("invalid inputs") {
  CHECK_THROWS_AS(new_params(1, std::vector<double>{}), InvalidParams);
  CHECK_THROWS_AS(new_params(3, std::vector<double>{1.0}), InvalidParams);
  CHECK_THROWS_AS(params_from_alpha(2, std::vector<double>{1.0, 0.0}), InvalidParams);
  CHECK_THROWS_AS(params_from_alpha(2, std::vector<double>{NAN, 0.0}), InvalidParams);
}

TEST_CASE("kappa to alpha") {
  const auto p = kappa_to_alpha(KappaParams{3, {cplx(1.0, 1.0), cplx(1.0, -1.0)}});
  CHECK(p.alpha()[0] == doctest::Approx(2.0));
  CHECK(p.alpha()[1] == doctest::Approx(-1.0 - std::sqrt(3.0)));
  CHECK(p.alpha()[2] == doctest::Approx(-1.0 + std::sqrt(3.0)));

  const auto q = kappa_to_alpha(KappaParams{2, {cplx(0.5)}});
  CHECK(q.alpha()[0] == doctest::Approx(0.5));
  CHECK(q.alpha()[1] == doctest::Approx(-0.5));

  CHECK_THROWS_AS(kappa_to_alpha(KappaParams{3, {cplx(1.0, 1.0), cplx(1.0, 1.0)}}), InvalidParams);
  CHECK_THROWS_AS(kappa_to_alpha(KappaParams{3, {cplx(1.0)}}), InvalidParams);
  CHECK_THROWS_AS(kappa_to_alpha(KappaParams{2, {cplx(-1.0)}}), FockConditionViolated);
}

TEST_CASE("kappa round trip") {
  std::mt19937_64 rng(21);
  for (int lambda = 2; lambda <= 6; ++lambda) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto p = testing::random_params(rng, lambda);
      const auto kp = alpha_to_kappa(p);
      for (int nu = 1; nu < lambda; ++nu) {
        CHECK(std::abs(std::conj(kp.kappa[nu - 1]) - kp.kappa[lambda - nu - 1]) < 1e-14);
      }
      const auto back = kappa_to_alpha(kp);
      for (int mu = 0; mu < lambda; ++mu) CHECK(std::abs(back.alpha()[mu] - p.alpha()[mu]) < 1e-12);
    }
  }
}

TEST_CASE("structure function") {
  const auto p = new_params(3, std::vector<double>{1.0, -0.5});
  CHECK(structure_function(p, 0) == 0.0);
  CHECK(structure_function(p, 1) == doctest::Approx(2.0));
  CHECK(structure_function(p, 2) == doctest::Approx(2.5));
  CHECK(structure_function(p, 3) == doctest::Approx(3.0));
  CHECK(structure_function(p, 4) == doctest::Approx(5.0));

  const auto q = kappa_to_alpha(KappaParams{2, {cplx(0.5)}});
  CHECK(structure_function(q, 1) == doctest::Approx(1.5));
  CHECK(structure_function(q, 2) == doctest::Approx(2.0));
  CHECK(structure_function(q, 3) == doctest::Approx(3.5));
}

TEST_CASE("structure function satisfies its recursion with q = 1") {
  std::mt19937_64 rng(22);
  for (int lambda = 2; lambda <= 5; ++lambda) {
    const auto p = testing::random_params(rng, lambda);
    std::vector<double> g;
    for (long n = 0; n < 4L * lambda; ++n) g.push_back(deformation_function(p, n));
    const auto f = solve_structure_function(1.0, g);
    for (long n = 0; n < static_cast<long>(f.size()); ++n) {
      CHECK(f[static_cast<std::size_t>(n)] == doctest::Approx(structure_function(p, n)).epsilon(1e-13));
      if (n > 0) CHECK(structure_function(p, n) > 0.0);
    }
  }
}

TEST_CASE("structure function for q != 1") {
  const std::vector<double> g(8, 1.0);
  const auto f = solve_structure_function(0.5, g);
  for (std::size_t n = 0; n < f.size(); ++n) CHECK(f[n] == doctest::Approx(2.0 * (1.0 - std::pow(0.5, n))));
}

TEST_CASE("oscillator energies") {
  const auto p = new_params(3, std::vector<double>{1.0, -0.5});
  CHECK(energy(p, 0, 0) == doctest::Approx(1.0));
  CHECK(energy(p, 0, 1) == doctest::Approx(2.25));
  CHECK(energy(p, 0, 2) == doctest::Approx(2.75));
  CHECK(energy(p, 1, 0) == doctest::Approx(4.0));

  const auto zero = new_params(4, std::vector<double>{0.0, 0.0, 0.0});
  for (long n = 0; n < 12; ++n) CHECK(energy(zero, n / 4, static_cast<int>(n % 4)) == doctest::Approx(n + 0.5));
}
