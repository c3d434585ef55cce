#include "cyclosc/ssqm.hpp"

#include "cyclosc/errors.hpp"

namespace cyclosc {

SusyModel build_ssqm(const FockRep& rep, bool broken) {
  if (rep.lambda() != 2) throw WrongLambda(2, rep.lambda());
  const double kappa = rep.params.alpha()[0];

  CMatrix shift = rep.tmat;
  shift.add_scaled(kappa, rep.identity());
  shift *= broken ? 0.5 : -0.5;

  SusyModel m;
  m.variant = SsqmVariant{broken};
  m.charges = {rep.adag * rep.P(broken ? 0 : 1)};
  m.hamiltonian = h0(rep) + shift;
  m.rep = std::make_shared<const FockRep>(rep);
  return m;
}

RelationReport verify_sqm2(const SusyModel& m) {
  const auto& rep = *m.rep;
  const std::size_t w = interior(rep, 2);
  const CMatrix& q = m.charges.at(0);
  const CMatrix& h = m.hamiltonian;
  const CMatrix qd = q.adjoint();

  RelationReport report;
  report.add("Q^2 = 0", column_norm(q * q, w), w);
  report.add("[H,Q] = 0", column_norm(commutator(h, q), w), w);
  report.add("{Q,Q+} = H", residual_norm(anticommutator(q, qd), h, w), w);
  return report;
}

}  // namespace cyclosc
