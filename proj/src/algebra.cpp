#include "cyclosc/algebra.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "cyclosc/errors.hpp"

namespace cyclosc {

namespace {

cplx root_of_unity(long num, int lambda) {
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(num % lambda) / lambda;
  return {std::cos(angle), std::sin(angle)};
}

void check_lambda(int lambda) {
  if (lambda < 2) throw InvalidParams("lambda must be >= 2, got " + std::to_string(lambda));
}

}  // namespace

AlgebraParams::AlgebraParams(int lambda, std::vector<double> alpha)
    : lambda_(lambda), alpha_(std::move(alpha)), beta_(lambda_, 0.0), gamma_(lambda_, 0.0) {
  for (int mu = 1; mu < lambda_; ++mu) beta_[mu] = beta_[mu - 1] + alpha_[mu - 1];
  for (int mu = 0; mu < lambda_; ++mu) gamma_[mu] = beta_[mu] + 0.5 * alpha_[mu];
}

std::size_t AlgebraParams::residue(long m) const {
  const long r = m % lambda_;
  return static_cast<std::size_t>(r < 0 ? r + lambda_ : r);
}

std::optional<int> fock_violation(std::span<const double> alpha) {
  double beta = 0.0;
  for (std::size_t mu = 1; mu < alpha.size(); ++mu) {
    beta += alpha[mu - 1];
    if (!(beta > -static_cast<double>(mu))) return static_cast<int>(mu);
  }
  return std::nullopt;
}

AlgebraParams make_params_unchecked(int lambda, std::vector<double> alpha) {
  return AlgebraParams(lambda, std::move(alpha));
}

AlgebraParams params_from_alpha(int lambda, std::span<const double> alpha) {
  check_lambda(lambda);
  if (alpha.size() != static_cast<std::size_t>(lambda)) {
    throw InvalidParams("expected " + std::to_string(lambda) + " alpha values, got " + std::to_string(alpha.size()));
  }
  for (double a : alpha) {
    if (!std::isfinite(a)) throw InvalidParams("alpha values must be finite");
  }
  const double sum = std::accumulate(alpha.begin(), alpha.end(), 0.0);
  if (std::abs(sum) > kLinearTol) throw InvalidParams("alpha values must sum to zero, sum = " + std::to_string(sum));
  if (auto mu = fock_violation(alpha)) throw FockConditionViolated(*mu);
  return make_params_unchecked(lambda, {alpha.begin(), alpha.end()});
}

AlgebraParams new_params(int lambda, std::span<const double> alpha_head) {
  check_lambda(lambda);
  if (alpha_head.size() != static_cast<std::size_t>(lambda - 1)) {
    throw InvalidParams("expected " + std::to_string(lambda - 1) + " free alpha values, got " +
                        std::to_string(alpha_head.size()));
  }
  std::vector<double> alpha(alpha_head.begin(), alpha_head.end());
  alpha.push_back(-std::accumulate(alpha_head.begin(), alpha_head.end(), 0.0));
  return params_from_alpha(lambda, alpha);
}

AlgebraParams kappa_to_alpha(const KappaParams& kp) {
  check_lambda(kp.lambda);
  const int lambda = kp.lambda;
  if (kp.kappa.size() != static_cast<std::size_t>(lambda - 1)) {
    throw InvalidParams("expected " + std::to_string(lambda - 1) + " kappa values");
  }
  // kappa_nu^* = kappa_{lambda - nu}
  for (int nu = 1; nu < lambda; ++nu) {
    if (std::abs(std::conj(kp.kappa[nu - 1]) - kp.kappa[lambda - nu - 1]) > kLinearTol) {
      throw InvalidParams("kappa violates conjugation symmetry at nu = " + std::to_string(nu));
    }
  }
  std::vector<double> alpha(lambda);
  for (int mu = 0; mu < lambda; ++mu) {
    cplx sum = 0.0;
    for (int nu = 1; nu < lambda; ++nu) sum += root_of_unity(static_cast<long>(mu) * nu, lambda) * kp.kappa[nu - 1];
    if (std::abs(sum.imag()) > 1e-10) {
      throw NotRealResult("alpha_" + std::to_string(mu) + " has imaginary part " + std::to_string(sum.imag()));
    }
    alpha[mu] = sum.real();
  }
  // Exact zero sum up to rounding; re-centre so the linear check cannot trip.
  const double drift = std::accumulate(alpha.begin(), alpha.end(), 0.0);
  alpha.back() -= drift;
  return params_from_alpha(lambda, alpha);
}

KappaParams alpha_to_kappa(const AlgebraParams& p) {
  const int lambda = p.lambda();
  KappaParams kp{lambda, std::vector<cplx>(lambda - 1)};
  for (int nu = 1; nu < lambda; ++nu) {
    cplx sum = 0.0;
    for (int mu = 0; mu < lambda; ++mu) sum += std::conj(root_of_unity(static_cast<long>(mu) * nu, lambda)) * p.alpha()[mu];
    kp.kappa[nu - 1] = sum / static_cast<double>(lambda);
  }
  return kp;
}

double structure_function(const AlgebraParams& p, long n) {
  return static_cast<double>(n) + p.beta_at(n);
}

double deformation_function(const AlgebraParams& p, long n) { return 1.0 + p.alpha_at(n); }

std::vector<double> solve_structure_function(double q, std::span<const double> g) {
  std::vector<double> f(g.size(), 0.0);
  for (std::size_t n = 0; n + 1 < g.size(); ++n) f[n + 1] = q * f[n] + g[n];
  return f;
}

double energy(const AlgebraParams& p, long k, int mu) {
  return static_cast<double>(k * p.lambda() + mu) + p.gamma()[p.residue(mu)] + 0.5;
}

}  // namespace cyclosc
