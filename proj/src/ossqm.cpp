#include "cyclosc/ossqm.hpp"

#include <cmath>
#include <numbers>

#include "cyclosc/errors.hpp"

namespace cyclosc {

namespace {

void check_shape(const FockRep& rep, const OssqmParams& op) {
  if (op.order != 2) {
    throw NotSupported("orthosupersymmetric order " + std::to_string(op.order) +
                       " is not realizable: A^(p+1)(G(N)) is not rich enough beyond order 2");
  }
  if (rep.lambda() != 3) throw WrongLambda(3, rep.lambda());
  if (op.mu == 2) throw Mu2Infeasible();
  if (op.mu < 0 || op.mu > 2) throw InvalidParams("family index mu must be 0 or 1");
  if (!(op.xi > 0.0 && op.xi <= std::sqrt(2.0))) throw InadmissibleParams("xi must satisfy 0 < xi <= sqrt(2)");
  if (!(op.phi >= 0.0 && op.phi < 2.0 * std::numbers::pi)) throw InadmissibleParams("phi must lie in [0, 2 pi)");
}

SusyModel assemble(const FockRep& rep, const OssqmParams& op) {
  const int mu = op.mu;
  const double comp = std::sqrt(std::max(0.0, 2.0 - op.xi * op.xi));
  const CMatrix lower = rep.a * rep.P(mu + 2);
  const CMatrix upper = rep.adag * rep.P(mu);

  CMatrix q1 = op.xi * lower;
  q1.add_scaled(std::polar(comp, op.phi), upper);
  CMatrix q2 = -std::polar(comp, -op.phi) * lower;
  q2.add_scaled(op.xi, upper);

  CMatrix h = rep.nmat;
  h.add_scaled(0.5 * (2.0 * rep.params.gamma_at(mu + 1) - 1.0), rep.identity());
  h.add_scaled(2.0, rep.P(mu));
  h += rep.P(mu + 1);

  SusyModel m;
  m.variant = OssqmVariant{mu, op.xi, op.phi};
  m.charges = {std::move(q1), std::move(q2)};
  m.hamiltonian = std::move(h);
  m.rep = std::make_shared<const FockRep>(rep);
  return m;
}

}  // namespace

SusyModel build_ossqm(const FockRep& rep, const OssqmParams& op) {
  check_shape(rep, op);
  const double a = rep.params.alpha_at(op.mu + 1);
  if (std::abs(a + 1.0) > kLinearTol) {
    throw ConstraintViolated("family mu = " + std::to_string(op.mu) + " needs alpha_" +
                             std::to_string(rep.params.residue(op.mu + 1)) + " = -1, got " + std::to_string(a));
  }
  return assemble(rep, op);
}

SusyModel build_ossqm_unconstrained(const FockRep& rep, const OssqmParams& op) {
  check_shape(rep, op);
  return assemble(rep, op);
}

RelationReport verify_ossqm(const SusyModel& m) {
  const auto& rep = *m.rep;
  const std::size_t w = interior(rep, 2);
  const auto& q = m.charges;
  const CMatrix& h = m.hamiltonian;

  CMatrix number_sum(rep.dim);
  for (const auto& qt : q) number_sum += qt.adjoint() * qt;

  RelationReport report;
  for (std::size_t r = 0; r < q.size(); ++r) {
    const std::string rn = std::to_string(r + 1);
    for (std::size_t s = 0; s < q.size(); ++s) {
      const std::string sn = std::to_string(s + 1);
      report.add("Q" + rn + " Q" + sn + " = 0", column_norm(q[r] * q[s], w), w);
    }
  }
  for (std::size_t r = 0; r < q.size(); ++r) {
    report.add("[H,Q" + std::to_string(r + 1) + "] = 0", column_norm(commutator(h, q[r]), w), w);
  }
  for (std::size_t r = 0; r < q.size(); ++r) {
    const std::string rn = std::to_string(r + 1);
    for (std::size_t s = 0; s < q.size(); ++s) {
      const std::string sn = std::to_string(s + 1);
      CMatrix lhs = q[r] * q[s].adjoint();
      if (r == s) {
        lhs += number_sum;
        report.add("Q" + rn + " Q" + sn + "+ + sum_t Qt+ Qt = 2H", residual_norm(lhs, 2.0 * h, w), w);
      } else {
        report.add("Q" + rn + " Q" + sn + "+ = 0", column_norm(lhs, w), w);
      }
    }
  }
  return report;
}

OssqmSpectrum ossqm_spectral_check(const SusyModel& m, double tol) {
  const auto spec = interior_spectrum(m, tol);
  OssqmSpectrum out;
  out.ground = ground_state_analysis(m, tol);
  out.broken = out.ground.sign != EnergySign::Zero;
  out.excited_multiplicity = excited_multiplicity(spec.classes);
  out.gap = equal_spacing_gap(spec.classes);
  return out;
}

}  // namespace cyclosc
