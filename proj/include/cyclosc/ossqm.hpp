#pragma once

// Orthosupersymmetric QM of order two bosonized by A^(3)(G(N)) with
// alpha_{mu+1} = -1:
//   Q_1 = xi a P_{mu+2} + e^{i phi} sqrt(2 - xi^2) a^dag P_mu
//   Q_2 = -e^{-i phi} sqrt(2 - xi^2) a P_{mu+2} + xi a^dag P_mu
//   H   = N + (2 gamma_{mu+1} - 1)/2 + 2 P_mu + P_{mu+1}
// for mu in {0, 1}, 0 < xi <= sqrt(2), 0 <= phi < 2 pi.

#include "cyclosc/fock.hpp"
#include "cyclosc/susy_model.hpp"

namespace cyclosc {

struct OssqmParams {
  int mu = 0;
  double xi = 1.0;
  double phi = 0.0;
  int order = 2;  // only order 2 is realizable on these algebras
};

// Throws WrongLambda, NotSupported (order != 2), Mu2Infeasible (mu = 2),
// InvalidParams (other mu), InadmissibleParams (xi, phi out of range),
// ConstraintViolated (|alpha_{mu+1} + 1| > 1e-12).
SusyModel build_ossqm(const FockRep& rep, const OssqmParams& op);

// Same construction without the alpha_{mu+1} = -1 check; negative controls only.
SusyModel build_ossqm_unconstrained(const FockRep& rep, const OssqmParams& op);

// Q_r Q_s = 0, [H, Q_r] = 0, Q_r Q_s^dag + delta_rs sum_t Q_t^dag Q_t = 2 delta_rs H
// for r, s in {1, 2}, on interior(rep, 2).
RelationReport verify_ossqm(const SusyModel& m);

struct OssqmSpectrum {
  bool broken = false;
  GroundState ground;
  std::optional<int> excited_multiplicity;
  std::optional<double> gap;
};

OssqmSpectrum ossqm_spectral_check(const SusyModel& m, double tol = kDegeneracyTol);

}  // namespace cyclosc
