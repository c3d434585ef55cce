#pragma once

// Parameters of the C_lambda-extended oscillator algebra and the closed-form
// quantities that follow from them (structure function, oscillator energies).
//
// The alpha_mu are the canonical parameters: [a, a^dag] = I + sum_mu alpha_mu P_mu.
// Every subscript is reduced mod lambda at the point of use.

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace cyclosc {

using cplx = std::complex<double>;

// Tolerance for the linear constraint sum_mu alpha_mu = 0.
inline constexpr double kLinearTol = 1e-12;

class AlgebraParams {
 public:
  int lambda() const { return lambda_; }
  const std::vector<double>& alpha() const { return alpha_; }
  const std::vector<double>& beta() const { return beta_; }
  const std::vector<double>& gamma() const { return gamma_; }

  // Residue of m mod lambda in [0, lambda).
  std::size_t residue(long m) const;

  double alpha_at(long mu) const { return alpha_[residue(mu)]; }
  double beta_at(long mu) const { return beta_[residue(mu)]; }
  double gamma_at(long mu) const { return gamma_[residue(mu)]; }

  // The lambda - 1 free parameters alpha_0 ... alpha_{lambda-2}.
  std::vector<double> alpha_head() const { return {alpha_.begin(), alpha_.end() - 1}; }

 private:
  friend AlgebraParams make_params_unchecked(int lambda, std::vector<double> alpha);
  AlgebraParams(int lambda, std::vector<double> alpha);

  int lambda_ = 2;
  std::vector<double> alpha_;
  std::vector<double> beta_;
  std::vector<double> gamma_;
};

struct KappaParams {
  int lambda = 2;
  std::vector<cplx> kappa;  // kappa_1 ... kappa_{lambda-1}
};

// alpha_{lambda-1} := -sum(alpha_head). Throws InvalidParams for lambda < 2 or
// a head of the wrong length, FockConditionViolated for the first mu with
// beta_mu <= -mu.
AlgebraParams new_params(int lambda, std::span<const double> alpha_head);

// Full alpha vector of length lambda; must sum to zero within kLinearTol.
AlgebraParams params_from_alpha(int lambda, std::span<const double> alpha);

// First mu in 1..lambda-1 with beta_mu <= -mu, if any.
std::optional<int> fock_violation(std::span<const double> alpha);

// Builds parameters without the Fock check. Only for negative controls.
AlgebraParams make_params_unchecked(int lambda, std::vector<double> alpha);

AlgebraParams kappa_to_alpha(const KappaParams& kp);
KappaParams alpha_to_kappa(const AlgebraParams& p);

// F(n) = n + beta_{n mod lambda}.
double structure_function(const AlgebraParams& p, long n);

// G(n) = 1 + alpha_{n mod lambda}, the right-hand side of [a, a^dag] in the
// number-operator realization.
double deformation_function(const AlgebraParams& p, long n);

// Solves F(n+1) = q F(n) + g(n) with F(0) = 0 for n = 0 .. g.size()-2.
std::vector<double> solve_structure_function(double q, std::span<const double> g);

// E_{k lambda + mu} = k lambda + mu + gamma_mu + 1/2.
double energy(const AlgebraParams& p, long k, int mu);

}  // namespace cyclosc
