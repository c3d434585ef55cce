#include "cyclosc/pseudo.hpp"

#include <cmath>
#include <numbers>

#include "cyclosc/errors.hpp"
#include "cyclosc/pssqm.hpp"

namespace cyclosc {

namespace {

void check_common(const FockRep& rep, const PseudoParams& pp) {
  if (rep.lambda() != 3) throw WrongLambda(3, rep.lambda());
  if (pp.mu < 0 || pp.mu > 2) throw InvalidParams("family index mu must lie in 0..2");
  if (!(pp.c != 0.0) || !std::isfinite(pp.c)) throw InadmissibleParams("c must be a nonzero real constant");
}

}  // namespace

double pseudo_type1_r(const AlgebraParams& params, const PseudoParams& pp) {
  const double c2 = pp.c * pp.c;
  return (1.0 + params.alpha_at(pp.mu + 2)) * (pp.eta * pp.eta - 2.0 * c2) / (2.0 * c2);
}

SusyModel build_pseudo_type1(const FockRep& rep, const PseudoParams& pp) {
  check_common(rep, pp);
  const double bound = 2.0 * std::abs(pp.c);
  if (!(pp.eta > 0.0 && pp.eta < bound)) {
    throw InadmissibleParams("eta must satisfy 0 < eta < 2|c| = " + std::to_string(bound));
  }
  if (!(pp.phi >= 0.0 && pp.phi < 2.0 * std::numbers::pi)) throw InadmissibleParams("phi must lie in [0, 2 pi)");

  const auto& params = rep.params;
  const int mu = pp.mu;
  const double r = pseudo_type1_r(params, pp);
  const cplx lower = std::polar(std::sqrt(4.0 * pp.c * pp.c - pp.eta * pp.eta), pp.phi);

  CMatrix ladder = pp.eta * rep.adag;
  ladder.add_scaled(lower, rep.a);

  CMatrix h = rep.nmat;
  h.add_scaled(0.5 * (2.0 * params.gamma_at(mu + 2) + r - 1.0), rep.identity());
  h.add_scaled(2.0, rep.P(mu + 1));
  h += rep.P(mu + 2);

  SusyModel m;
  m.variant = Pseudo1Variant{mu, pp.c, pp.eta, pp.phi, r};
  m.charges = {ladder * rep.P(mu + 2)};
  m.hamiltonian = std::move(h);
  m.rep = std::make_shared<const FockRep>(rep);
  return m;
}

SusyModel build_pseudo_type2(const FockRep& rep, const PseudoParams& pp) {
  check_common(rep, pp);
  if (!std::isfinite(pp.r_mu)) throw InadmissibleParams("r_mu must be finite");
  const auto& params = rep.params;
  const int mu = pp.mu;

  CMatrix h = rep.nmat;
  h.add_scaled(0.5 * (2.0 * params.gamma_at(mu + 2) - params.alpha_at(mu + 2)), rep.identity());
  h.add_scaled(0.5 * (1.0 - params.alpha_at(mu + 1) + params.alpha_at(mu + 2) + pp.r_mu), rep.P(mu));
  h += rep.P(mu + 1);

  SusyModel m;
  m.variant = Pseudo2Variant{mu, pp.c, pp.r_mu};
  m.charges = {(2.0 * std::abs(pp.c)) * (rep.a * rep.P(mu + 2))};
  m.hamiltonian = std::move(h);
  m.rep = std::make_shared<const FockRep>(rep);
  return m;
}

RelationReport verify_pseudo(const SusyModel& m, double c) {
  const auto& rep = *m.rep;
  const std::size_t w = interior(rep, 3);
  const CMatrix& q = m.charges.at(0);
  const CMatrix& h = m.hamiltonian;

  RelationReport report;
  report.add("Q^2 = 0", column_norm(q * q, w), w);
  report.add("[H,Q] = 0", column_norm(commutator(h, q), w), w);
  report.add("Q Q+ Q = 4c^2 Q H", residual_norm(q * q.adjoint() * q, (4.0 * c * c) * (q * h), w), w);
  return report;
}

double equal_spacing_condition(const AlgebraParams& params, int mu) {
  if (params.lambda() != 3) throw WrongLambda(3, params.lambda());
  const double r = std::fmod(params.alpha_at(mu + 1) - params.alpha_at(mu + 2) + 3.0, 6.0);
  return r < 0.0 ? r + 6.0 : r;
}

double coincidence_with_pssqm(const FockRep& rep, int mu, double c) {
  const PseudoParams pp{mu, c, std::sqrt(2.0) * std::abs(c), 0.0, 0.0};
  const auto pseudo = build_pseudo_type1(rep, pp);
  const auto para = build_pssqm(rep, mu);
  return max_abs_diff(pseudo.hamiltonian, para.hamiltonian, interior(rep, 1));
}

double charge_difference_with_pssqm(const FockRep& rep, int mu, double c) {
  const PseudoParams pp{mu, c, std::sqrt(2.0) * std::abs(c), 0.0, 0.0};
  const auto pseudo = build_pseudo_type1(rep, pp);
  const auto para = build_pssqm(rep, mu);
  return max_abs_diff(pseudo.charges[0], para.charges[0], interior(rep, 1));
}

GroundTransition locate_type2_transition(const FockRep& rep, int mu, double c, double r_lo, double r_hi,
                                         double tol) {
  auto ground_at = [&](double r) {
    return ground_state_analysis(build_pseudo_type2(rep, PseudoParams{mu, c, 1.0, 0.0, r}));
  };
  const double e_high = ground_at(r_hi).energy;
  // Below the transition the P_mu level is the unique lowest one and moves with r.
  auto below = [&](double r) { return ground_at(r).energy < e_high - kDegeneracyTol; };
  if (!below(r_lo)) return {r_lo, ground_at(r_lo)};
  double lo = r_lo, hi = r_hi;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    (below(mid) ? lo : hi) = mid;
  }
  // Land exactly on the crossing: the P_mu level rises with slope 1/2 in r.
  const double r_star = lo + 2.0 * (e_high - ground_at(lo).energy);
  return {r_star, ground_at(r_star)};
}

}  // namespace cyclosc
