#pragma once

// Parasupersymmetric QM of order p bosonized by A^(p+1)(G(N)).
//
// Family mu in {0, ..., p} has the representative
//   Q_mu = sqrt(2) sum_{nu=1..p} a^dag P_{mu+nu}
//   H_mu = N + (2 gamma_{mu+2} + r_{mu+2} - 2p + 3)/2 + sum_{nu=1..p} (p+1-nu) P_{mu+nu}
// and satisfies
//   Q^{p+1} = 0,  [H, Q] = 0,  sum_{k=0..p} Q^{p-k} Q^dag Q^k = 2p Q^{p-1} H.

#include <complex>
#include <vector>

#include "cyclosc/fock.hpp"
#include "cyclosc/susy_model.hpp"

namespace cyclosc {

// Coefficients of the ansatz Q = sum_nu sigma_nu a^dag P_nu,
// H = H_0 + (1/2) sum_nu r_nu P_nu.
struct PssqmSolution {
  int p = 1;
  int mu = 0;
  std::vector<cplx> sigma;  // sigma_0 ... sigma_p
  std::vector<double> r;    // r_0 ... r_p
  double residual = 0.0;    // stacked relation residual at this point
};

// r_{mu+2} = [(p-2) alpha_{mu+2} + 2 sum_{nu=3..p} (p-nu+1) alpha_{mu+nu} + p(p-2)] / p
double pssqm_r(const AlgebraParams& params, int mu);

// The representative of family mu expressed in ansatz coefficients.
PssqmSolution pssqm_representative(const AlgebraParams& params, int mu);

// Throws InvalidParams for mu outside 0..p.
SusyModel build_pssqm(const FockRep& rep, int mu);

// Ansatz model from arbitrary coefficients (sigma.size() == r.size() == lambda).
SusyModel build_pssqm_ansatz(const FockRep& rep, const PssqmSolution& s);

// Relations on interior(rep, p+1): Q^{p+1} = 0, the Q^p witness, [H, Q] = 0,
// the multilinear relation with H on the right and on the left.
RelationReport verify_pssqm(const SusyModel& m, int p);

// [Q, [Q^dag, Q]] = 2 Q H on interior(rep, 3). Throws NotSupported unless the
// model is an order-2 parasupersymmetric one.
RelationReport verify_bd_cubic(const SusyModel& m);

struct AnsatzSearchOptions {
  int starts = 20;
  unsigned seed = 20240611;
  double tol = 1e-8;  // residual threshold for an accepted solution
};

// Multistart least-squares over (sigma, r). Solutions are clustered by the
// support of |sigma|; within each family the equal-magnitude representative is
// then selected. Returns one solution per family, ordered by family index mu
// (the index with sigma_mu = 0). Throws SearchInconclusive if no start reaches
// the threshold.
std::vector<PssqmSolution> search_ansatz(const FockRep& rep, const AnsatzSearchOptions& opts = {});

// Stacked residual vector of the order-p relations for the ansatz (used by the
// search, exposed for tests).
double ansatz_residual(const FockRep& rep, const PssqmSolution& s);

}  // namespace cyclosc
