// Numerical exploration of the parasupersymmetric ansatz
//   Q = sum_nu sigma_nu a^dag P_nu,  H = H_0 + (1/2) sum_nu r_nu P_nu.
// Backed by the MINPACK-style Levenberg-Marquardt solver shipped with Eigen.

#include <Eigen/Core>
#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <random>
#include <unsupported/Eigen/NonLinearOptimization>
#include <unsupported/Eigen/NumericalDiff>

#include "cyclosc/errors.hpp"
#include "cyclosc/parallel.hpp"
#include "cyclosc/pssqm.hpp"

namespace cyclosc {

namespace {

// Support threshold on |sigma_nu| when clustering solutions into families.
constexpr double kSupportTol = 1e-4;

// Stacked real and imaginary parts of the three order-p relations on the
// interior columns.
Eigen::VectorXd relation_vector(const FockRep& rep, const std::vector<cplx>& sigma, const std::vector<double>& r) {
  const int lambda = rep.lambda();
  const int p = lambda - 1;
  const std::size_t dim = rep.dim;
  const std::size_t w = interior(rep, static_cast<std::size_t>(p) + 1);

  CMatrix q(dim);
  CMatrix h(dim);
  for (std::size_t n = 0; n < dim; ++n) {
    const auto nu = static_cast<int>(n % lambda);
    if (n + 1 < dim) q(n + 1, n) = sigma[nu] * rep.adag(n + 1, n);
    h(n, n) = static_cast<double>(n) + 0.5 + rep.params.gamma()[nu] + 0.5 * r[nu];
  }
  const CMatrix qd = q.adjoint();
  std::vector<CMatrix> powers{CMatrix::identity(dim)};
  for (int k = 1; k <= p + 1; ++k) powers.push_back(powers.back() * q);
  CMatrix multilinear(dim);
  for (int k = 0; k <= p; ++k) multilinear += powers[p - k] * qd * powers[k];
  multilinear.add_scaled(-2.0 * p, powers[p - 1] * h);

  const CMatrix* blocks[] = {&powers[p + 1], nullptr, &multilinear};
  const CMatrix comm = commutator(h, q);
  blocks[1] = &comm;

  Eigen::VectorXd out(static_cast<Eigen::Index>(3 * 2 * dim * w));
  Eigen::Index idx = 0;
  for (const CMatrix* m : blocks)
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < w; ++j) {
        out[idx++] = (*m)(i, j).real();
        out[idx++] = (*m)(i, j).imag();
      }
  return out;
}

struct FullAnsatz {
  using Scalar = double;
  using InputType = Eigen::VectorXd;
  using ValueType = Eigen::VectorXd;
  using JacobianType = Eigen::MatrixXd;
  enum { InputsAtCompileTime = Eigen::Dynamic, ValuesAtCompileTime = Eigen::Dynamic };

  const FockRep* rep;
  Eigen::Index n_values;

  int inputs() const { return 3 * rep->lambda(); }
  int values() const { return static_cast<int>(n_values); }

  static void unpack(const Eigen::VectorXd& x, int lambda, std::vector<cplx>& sigma, std::vector<double>& r) {
    sigma.resize(lambda);
    r.resize(lambda);
    for (int nu = 0; nu < lambda; ++nu) {
      sigma[nu] = cplx(x[nu], x[lambda + nu]);
      r[nu] = x[2 * lambda + nu];
    }
  }

  int operator()(const Eigen::VectorXd& x, Eigen::VectorXd& fvec) const {
    std::vector<cplx> sigma;
    std::vector<double> r;
    unpack(x, rep->lambda(), sigma, r);
    fvec = relation_vector(*rep, sigma, r);
    return 0;
  }
};

// Family mu with equal magnitudes on the support and fixed phases:
// sigma_nu = s exp(i theta_nu) for nu != mu. Unknowns (s, r_0..r_p).
struct EqualMagnitudeAnsatz {
  using Scalar = double;
  using InputType = Eigen::VectorXd;
  using ValueType = Eigen::VectorXd;
  using JacobianType = Eigen::MatrixXd;
  enum { InputsAtCompileTime = Eigen::Dynamic, ValuesAtCompileTime = Eigen::Dynamic };

  const FockRep* rep;
  Eigen::Index n_values;
  int mu;
  std::vector<cplx> phases;

  int inputs() const { return 1 + rep->lambda(); }
  int values() const { return static_cast<int>(n_values); }

  void unpack(const Eigen::VectorXd& x, std::vector<cplx>& sigma, std::vector<double>& r) const {
    const int lambda = rep->lambda();
    sigma.assign(lambda, 0.0);
    r.resize(lambda);
    for (int nu = 0; nu < lambda; ++nu) {
      if (nu != mu) sigma[nu] = x[0] * phases[nu];
      r[nu] = x[1 + nu];
    }
  }

  int operator()(const Eigen::VectorXd& x, Eigen::VectorXd& fvec) const {
    std::vector<cplx> sigma;
    std::vector<double> r;
    unpack(x, sigma, r);
    fvec = relation_vector(*rep, sigma, r);
    return 0;
  }
};

template <class Functor>
Eigen::VectorXd minimize(const Functor& f, Eigen::VectorXd x) {
  // Larger step than the default sqrt(eps): the central-difference Jacobian
  // otherwise stalls the equal-magnitude refinement near 1e-8.
  Eigen::NumericalDiff<Functor, Eigen::Central> diff(f, 1e-10);
  Eigen::LevenbergMarquardt<Eigen::NumericalDiff<Functor, Eigen::Central>> lm(diff);
  lm.parameters.ftol = 1e-15;
  lm.parameters.xtol = 1e-15;
  lm.parameters.maxfev = 4000;
  // MINPACK may stop on its relative tolerances before the residual is at
  // rounding level; restart from the last iterate while it keeps improving.
  double last = std::numeric_limits<double>::infinity();
  for (int pass = 0; pass < 8; ++pass) {
    lm.minimize(x);
    Eigen::VectorXd fvec(f.values());
    f(x, fvec);
    const double norm = fvec.norm();
    if (!(norm < 0.5 * last)) break;
    last = norm;
  }
  return x;
}

double witness_norm(const FockRep& rep, const std::vector<cplx>& sigma, const std::vector<double>& r, int mu) {
  PssqmSolution s{rep.lambda() - 1, mu, sigma, r, 0.0};
  const auto report = verify_pssqm(build_pssqm_ansatz(rep, s), rep.lambda() - 1);
  return report.find("|Q^p| (nonvanishing)")->value;
}

}  // namespace

std::vector<PssqmSolution> search_ansatz(const FockRep& rep, const AnsatzSearchOptions& opts) {
  const int lambda = rep.lambda();
  const int p = lambda - 1;
  if (rep.dim < 4 * static_cast<std::size_t>(lambda)) throw InvalidParams("ansatz search needs at least 4 blocks");
  if (opts.starts < 1) throw InvalidParams("ansatz search needs at least one start");

  const Eigen::Index n_values = relation_vector(rep, std::vector<cplx>(lambda, 0.0), std::vector<double>(lambda, 0.0)).size();

  struct StartResult {
    std::vector<cplx> sigma;
    std::vector<double> r;
    double residual = 0.0;
  };
  std::vector<StartResult> results(static_cast<std::size_t>(opts.starts));

  parallel_for(results.size(), [&](std::size_t start) {
    std::mt19937_64 rng(opts.seed + 7919 * start);
    std::uniform_real_distribution<double> mag(0.5, 2.5);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
    std::uniform_real_distribution<double> shift(-4.0, 4.0);
    Eigen::VectorXd x(3 * lambda);
    for (int nu = 0; nu < lambda; ++nu) {
      const double m = mag(rng), th = phase(rng);
      x[nu] = m * std::cos(th);
      x[lambda + nu] = m * std::sin(th);
    }
    for (int nu = 0; nu < lambda; ++nu) x[2 * lambda + nu] = shift(rng);

    const FullAnsatz f{&rep, n_values};
    x = minimize(f, x);
    StartResult& out = results[start];
    FullAnsatz::unpack(x, lambda, out.sigma, out.r);
    out.residual = relation_vector(rep, out.sigma, out.r).norm();
  });

  // Cluster accepted, nontrivial solutions by the single vanishing coefficient.
  double best = std::numeric_limits<double>::infinity();
  std::map<int, const StartResult*> families;
  for (const auto& res : results) {
    best = std::min(best, res.residual);
    if (res.residual >= opts.tol) continue;
    std::vector<int> zeros;
    for (int nu = 0; nu < lambda; ++nu)
      if (std::abs(res.sigma[nu]) < kSupportTol) zeros.push_back(nu);
    if (zeros.size() != 1) continue;
    if (witness_norm(rep, res.sigma, res.r, zeros[0]) <= kWitnessThreshold) continue;
    families.try_emplace(zeros[0], &res);
  }
  if (families.empty()) throw SearchInconclusive(best);

  std::vector<PssqmSolution> out;
  for (const auto& [mu, res] : families) {
    EqualMagnitudeAnsatz f{&rep, n_values, mu, std::vector<cplx>(lambda, 1.0)};
    double rms = 0.0;
    for (int nu = 0; nu < lambda; ++nu) {
      if (nu == mu) continue;
      f.phases[nu] = std::polar(1.0, std::arg(res->sigma[nu]));
      rms += std::norm(res->sigma[nu]);
    }
    Eigen::VectorXd x(1 + lambda);
    x[0] = std::sqrt(rms / p);
    for (int nu = 0; nu < lambda; ++nu) x[1 + nu] = res->r[nu];
    x = minimize(f, x);

    PssqmSolution s{p, mu, {}, {}, 0.0};
    f.unpack(x, s.sigma, s.r);
    if (x[0] < 0) {
      for (auto& v : s.sigma) v = -v;
    }
    s.residual = relation_vector(rep, s.sigma, s.r).norm();
    if (s.residual >= opts.tol) continue;
    out.push_back(std::move(s));
  }
  if (out.empty()) throw SearchInconclusive(best);
  return out;
}

}  // namespace cyclosc
