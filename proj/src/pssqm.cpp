#include "cyclosc/pssqm.hpp"

#include <cmath>

#include "cyclosc/errors.hpp"

namespace cyclosc {

namespace {

int order_of(const FockRep& rep) { return rep.lambda() - 1; }

void check_family(int p, int mu) {
  if (mu < 0 || mu > p) {
    throw InvalidParams("family index mu must lie in 0.." + std::to_string(p) + ", got " + std::to_string(mu));
  }
}

// Constant term (2 gamma_{mu+2} + r_{mu+2} - 2p + 3)/2 of H_mu.
double pssqm_constant(const AlgebraParams& params, int mu) {
  const int p = params.lambda() - 1;
  return 0.5 * (2.0 * params.gamma_at(mu + 2) + pssqm_r(params, mu) - 2.0 * p + 3.0);
}

// Coefficient of P_nu in H_mu: p + 1 - j for nu = mu + j, j = 1..p; zero for nu = mu.
double projector_weight(const AlgebraParams& params, int mu, int nu) {
  const int p = params.lambda() - 1;
  const auto j = static_cast<int>(params.residue(nu - mu));
  return j == 0 ? 0.0 : static_cast<double>(p + 1 - j);
}

}  // namespace

double pssqm_r(const AlgebraParams& params, int mu) {
  const int p = params.lambda() - 1;
  double sum = 0.0;
  for (int nu = 3; nu <= p; ++nu) sum += (p - nu + 1) * params.alpha_at(mu + nu);
  return ((p - 2) * params.alpha_at(mu + 2) + 2.0 * sum + p * (p - 2.0)) / p;
}

PssqmSolution pssqm_representative(const AlgebraParams& params, int mu) {
  const int p = params.lambda() - 1;
  check_family(p, mu);
  PssqmSolution s{p, mu, std::vector<cplx>(p + 1, std::sqrt(2.0)), std::vector<double>(p + 1, 0.0), 0.0};
  s.sigma[mu] = 0.0;
  const double c = pssqm_constant(params, mu);
  // H_mu - H_0 restricted to F_nu equals c + weight_nu - 1/2 - gamma_nu.
  for (int nu = 0; nu <= p; ++nu) s.r[nu] = 2.0 * (c + projector_weight(params, mu, nu) - 0.5 - params.gamma()[nu]);
  return s;
}

SusyModel build_pssqm(const FockRep& rep, int mu) {
  const int p = order_of(rep);
  check_family(p, mu);
  const auto& params = rep.params;

  CMatrix q(rep.dim);
  for (int nu = 1; nu <= p; ++nu) q += rep.adag * rep.P(mu + nu);
  q *= std::sqrt(2.0);

  CMatrix h = rep.nmat;
  h.add_scaled(pssqm_constant(params, mu), rep.identity());
  for (int nu = 1; nu <= p; ++nu) h.add_scaled(static_cast<double>(p + 1 - nu), rep.P(mu + nu));

  SusyModel m;
  m.variant = PssqmVariant{p, mu};
  m.charges = {std::move(q)};
  m.hamiltonian = std::move(h);
  m.rep = std::make_shared<const FockRep>(rep);
  return m;
}

SusyModel build_pssqm_ansatz(const FockRep& rep, const PssqmSolution& s) {
  const int lambda = rep.lambda();
  if (s.sigma.size() != static_cast<std::size_t>(lambda) || s.r.size() != static_cast<std::size_t>(lambda)) {
    throw InvalidParams("ansatz coefficients must have lambda entries");
  }
  CMatrix q(rep.dim);
  CMatrix h = rep.nmat;
  h.add_scaled(0.5, rep.identity());
  for (int nu = 0; nu < lambda; ++nu) {
    q.add_scaled(s.sigma[nu], rep.adag * rep.P(nu));
    h.add_scaled(rep.params.gamma()[nu] + 0.5 * s.r[nu], rep.P(nu));
  }
  SusyModel m;
  m.variant = PssqmVariant{lambda - 1, s.mu};
  m.charges = {std::move(q)};
  m.hamiltonian = std::move(h);
  m.rep = std::make_shared<const FockRep>(rep);
  return m;
}

RelationReport verify_pssqm(const SusyModel& m, int p) {
  if (p < 1) throw InvalidParams("order p must be >= 1");
  const auto& rep = *m.rep;
  const std::size_t w = interior(rep, static_cast<std::size_t>(p) + 1);
  const CMatrix& q = m.charges.at(0);
  const CMatrix& h = m.hamiltonian;
  const CMatrix qd = q.adjoint();

  std::vector<CMatrix> powers{CMatrix::identity(rep.dim)};
  for (int k = 1; k <= p + 1; ++k) powers.push_back(powers.back() * q);

  CMatrix lhs(rep.dim);
  for (int k = 0; k <= p; ++k) lhs += powers[p - k] * qd * powers[k];
  const CMatrix rhs_right = (2.0 * p) * (powers[p - 1] * h);
  const CMatrix rhs_left = (2.0 * p) * (h * powers[p - 1]);

  RelationReport report;
  report.add("Q^(p+1) = 0", column_norm(powers[p + 1], w), w);
  report.add("|Q^p| (nonvanishing)", column_norm(powers[p], w), w, RelationEntry::Expect::NonZero);
  report.add("[H,Q] = 0", column_norm(commutator(h, q), w), w);
  report.add("sum_k Q^(p-k) Q+ Q^k = 2p Q^(p-1) H", residual_norm(lhs, rhs_right, w), w);
  report.add("sum_k Q^(p-k) Q+ Q^k = 2p H Q^(p-1)", residual_norm(lhs, rhs_left, w), w);
  return report;
}

RelationReport verify_bd_cubic(const SusyModel& m) {
  const auto* v = std::get_if<PssqmVariant>(&m.variant);
  if (v == nullptr || v->p != 2) {
    throw NotSupported("the cubic relation applies to order-2 parasupersymmetric models only");
  }
  const auto& rep = *m.rep;
  const std::size_t w = interior(rep, 3);
  const CMatrix& q = m.charges.at(0);
  const CMatrix inner = commutator(q.adjoint(), q);

  RelationReport report;
  report.add("[Q,[Q+,Q]] = 2 Q H", residual_norm(commutator(q, inner), 2.0 * (q * m.hamiltonian), w), w);
  return report;
}

double ansatz_residual(const FockRep& rep, const PssqmSolution& s) {
  const auto report = verify_pssqm(build_pssqm_ansatz(rep, s), rep.lambda() - 1);
  double sq = 0.0;
  for (const auto& e : report.entries)
    if (e.expect == RelationEntry::Expect::Zero) sq += e.value * e.value;
  return std::sqrt(sq);
}

}  // namespace cyclosc
