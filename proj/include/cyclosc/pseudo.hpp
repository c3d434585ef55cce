#pragma once

// Pseudosupersymmetric QM bosonized by A^(3)(G(N)):
//   Q^2 = 0,  [H, Q] = 0,  Q Q^dag Q = 4 c^2 Q H.
//
// Type 1 (two-parameter families, mu in {0,1,2}):
//   Q = (eta a^dag + e^{i phi} sqrt(4c^2 - eta^2) a) P_{mu+2}
//   H = N + (2 gamma_{mu+2} + r_{mu+2} - 1)/2 + 2 P_{mu+1} + P_{mu+2}
//   r_{mu+2} = (1 + alpha_{mu+2}) (eta^2 - 2c^2) / (2c^2)
// Type 2 (one-parameter families):
//   Q = 2|c| a P_{mu+2}
//   H = N + (2 gamma_{mu+2} - alpha_{mu+2})/2 + (1 - alpha_{mu+1} + alpha_{mu+2} + r_mu)/2 P_mu + P_{mu+1}

#include "cyclosc/fock.hpp"
#include "cyclosc/susy_model.hpp"

namespace cyclosc {

struct PseudoParams {
  int mu = 0;
  double c = 1.0;
  double eta = 1.0;  // type 1: 0 < eta < 2|c|
  double phi = 0.0;  // type 1: [0, 2 pi)
  double r_mu = 0.0;  // type 2
};

// r_{mu+2} of the type-1 family.
double pseudo_type1_r(const AlgebraParams& params, const PseudoParams& pp);

// Throws WrongLambda, InadmissibleParams (c = 0, eta outside (0, 2|c|), phi
// outside [0, 2 pi)) or InvalidParams (mu outside 0..2).
SusyModel build_pseudo_type1(const FockRep& rep, const PseudoParams& pp);
SusyModel build_pseudo_type2(const FockRep& rep, const PseudoParams& pp);

// Relations on interior(rep, 3).
RelationReport verify_pseudo(const SusyModel& m, double c);

// r_mu = (alpha_{mu+1} - alpha_{mu+2} + 3) mod 6, canonicalized into [0, 6).
double equal_spacing_condition(const AlgebraParams& params, int mu);

// Largest entrywise difference on the interior between the type-1 Hamiltonian
// at eta = sqrt(2)|c|, phi = 0 and the order-2 parasupersymmetric H_mu.
double coincidence_with_pssqm(const FockRep& rep, int mu, double c);

// Same comparison for the charges.
double charge_difference_with_pssqm(const FockRep& rep, int mu, double c);

// Ground-state transition of the type-2 family as r_mu increases: the largest
// r in [r_lo, r_hi] for which the ground state still lies lower than at r_hi,
// located by bisection, with the ground state measured there.
struct GroundTransition {
  double r = 0.0;
  GroundState ground;
};
GroundTransition locate_type2_transition(const FockRep& rep, int mu, double c, double r_lo, double r_hi,
                                         double tol = 1e-10);

}  // namespace cyclosc
