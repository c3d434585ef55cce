#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"

#include "cyclosc/errors.hpp"
#include "cyclosc/ossqm.hpp"
#include "test_support.hpp"

using namespace cyclosc;

TEST_CASE("documented points") {
  const auto rep0 = build(params_from_alpha(3, std::vector<double>{0.5, -1.0, 0.5}), 5);
  const auto m0 = build_ossqm(rep0, OssqmParams{0, 1.0, 1.1});
  CHECK(verify_ossqm(m0).max_residual() < 1e-10);
  const auto s0 = ossqm_spectral_check(m0);
  CHECK(s0.broken);
  CHECK(s0.ground.degeneracy == 3);
  CHECK(s0.ground.energy > 0.0);
  CHECK(s0.excited_multiplicity == 3);

  const auto rep1 = build(params_from_alpha(3, std::vector<double>{0.5, 0.5, -1.0}), 5);
  const auto m1 = build_ossqm(rep1, OssqmParams{1, 1.0, 0.0});
  CHECK(verify_ossqm(m1).max_residual() < 1e-10);
  const auto s1 = ossqm_spectral_check(m1);
  CHECK_FALSE(s1.broken);
  CHECK(s1.ground.degeneracy == 1);
  CHECK(std::abs(s1.ground.energy) < 1e-9);
  CHECK(s1.excited_multiplicity == 3);
}

TEST_CASE("boundary xi = sqrt(2)") {
  const auto rep = build(params_from_alpha(3, std::vector<double>{0.5, -1.0, 0.5}), 5);
  const auto m = build_ossqm(rep, OssqmParams{0, std::sqrt(2.0), 0.3});
  CHECK(verify_ossqm(m).max_residual() < 1e-10);
  CHECK(max_abs_diff(m.charges[0], std::sqrt(2.0) * (rep.a * rep.P(2)), rep.dim) < 1e-15);
  CHECK(max_abs_diff(m.charges[1], std::sqrt(2.0) * (rep.adag * rep.P(0)), rep.dim) < 1e-15);
}

TEST_CASE("rejections") {
  const auto rep = build(params_from_alpha(3, std::vector<double>{0.5, -1.0, 0.5}), 5);
  CHECK_THROWS_AS(build_ossqm(rep, OssqmParams{2, 1.0, 0.0}), Mu2Infeasible);
  CHECK_THROWS_AS(build_ossqm(rep, OssqmParams{0, 1.0, 0.0, 3}), NotSupported);
  CHECK_THROWS_AS(build_ossqm(rep, OssqmParams{0, 1.5, 0.0}), InadmissibleParams);
  CHECK_THROWS_AS(build_ossqm(rep, OssqmParams{0, 0.0, 0.0}), InadmissibleParams);
  CHECK_THROWS_AS(build_ossqm(rep, OssqmParams{0, 1.0, -0.1}), InadmissibleParams);
  CHECK_THROWS_AS(build_ossqm(rep, OssqmParams{1, 1.0, 0.0}), ConstraintViolated);
  const auto rep2 = build(new_params(2, std::vector<double>{0.2}), 5);
  CHECK_THROWS_AS(build_ossqm(rep2, OssqmParams{0, 1.0, 0.0}), WrongLambda);
  // The mu = 2 family would need alpha_0 = -1.
  CHECK_THROWS_AS(params_from_alpha(3, std::vector<double>{-1.0, 0.5, 0.5}), FockConditionViolated);
}

TEST_CASE("the constraint is necessary") {
  const auto rep = build(params_from_alpha(3, std::vector<double>{-0.5, 0.5, 0.0}), 5);
  const auto m = build_ossqm_unconstrained(rep, OssqmParams{0, 1.0, 0.0});
  CHECK(verify_ossqm(m).find("Q1 Q1+ + sum_t Qt+ Qt = 2H")->value >= 0.01);
}

TEST_CASE("H is independent of xi and phi") {
  const auto rep = build(params_from_alpha(3, std::vector<double>{0.5, -1.0, 0.5}), 5);
  const auto a = build_ossqm(rep, OssqmParams{0, 0.3, 0.0});
  const auto b = build_ossqm(rep, OssqmParams{0, std::sqrt(2.0), 5.9});
  CHECK(a.hamiltonian == b.hamiltonian);
}

TEST_CASE("random constrained points") {
  std::mt19937_64 rng(81);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int mu = 0; mu < 2; ++mu) {
    for (int trial = 0; trial < 5; ++trial) {
      const auto params = testing::random_params_with(rng, 3, mu + 1, -1.0);
      const auto rep = build(params, 5);
      const OssqmParams op{mu, std::sqrt(2.0) * (0.05 + 0.95 * unit(rng)), 2.0 * std::numbers::pi * unit(rng)};
      const auto m = build_ossqm(rep, op);
      const auto report = verify_ossqm(m);
      CHECK(report.passed(1e-9));
      CHECK(report.find("Q1 Q2+ = 0")->value < 1e-9);
      const auto s = ossqm_spectral_check(m);
      CHECK(s.broken == (mu == 0));
      CHECK(s.excited_multiplicity == 3);
      CHECK(s.gap == doctest::Approx(3.0));
      CHECK(s.ground.degeneracy == (mu == 0 ? 3 : 1));
    }
  }
}

TEST_CASE("feasible region for the constrained families") {
  // mu = 1 fixes alpha_2 = -1, so alpha = (a0, 1 - a0, -1): beta_1 = a0 and beta_2 = 1.
  // mu = 0 fixes alpha_1 = -1, so alpha = (a0, -1, 1 - a0): beta_1 = a0 and beta_2 = a0 - 1.
  for (double a0 = -1.5; a0 <= 1.5; a0 += 0.125) {
    const bool expected = a0 > -1.0;
    const std::vector<double> mu1{a0, 1.0 - a0, -1.0};
    CHECK((fock_violation(mu1) == std::nullopt) == (a0 > -1.0 && 1.0 > -2.0));
    CHECK((fock_violation(mu1) == std::nullopt) == expected);
    const std::vector<double> mu0{a0, -1.0, 1.0 - a0};
    CHECK((fock_violation(mu0) == std::nullopt) == (a0 > -1.0 && a0 - 1.0 > -2.0));
  }
}

TEST_CASE("every Fock-feasible free parameter passes") {
  for (double a0 = -0.95; a0 <= 3.0; a0 += 0.05) {
    const auto rep0 = build(params_from_alpha(3, std::vector<double>{a0, -1.0, 1.0 - a0}), 5);
    CHECK(verify_ossqm(build_ossqm(rep0, OssqmParams{0, 1.0, 0.4})).passed(1e-9));
    const auto rep1 = build(params_from_alpha(3, std::vector<double>{a0, 1.0 - a0, -1.0}), 5);
    CHECK(verify_ossqm(build_ossqm(rep1, OssqmParams{1, 1.0, 0.4})).passed(1e-9));
  }
}
