#pragma once

// Supersymmetric QM bosonized by the lambda = 2 (Calogero-Vasiliev) algebra.
//
//   unbroken: Q = a^dag P_1,  H = H_0 - (K + kappa)/2
//   broken:   Q = a^dag P_0,  H = H_0 + (K + kappa)/2
//
// with K = T and kappa = alpha_0.

#include "cyclosc/fock.hpp"
#include "cyclosc/susy_model.hpp"

namespace cyclosc {

// Throws WrongLambda unless rep.lambda() == 2.
SusyModel build_ssqm(const FockRep& rep, bool broken);

// Q^2 = 0, [H, Q] = 0, {Q, Q^dag} = H on interior(rep, 2).
RelationReport verify_sqm2(const SusyModel& m);

}  // namespace cyclosc
