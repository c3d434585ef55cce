#pragma once

// Truncated bosonic Fock representation of the C_lambda-extended algebra.
//
// Basis |0>, ..., |D-1> with D = K lambda. The ladder matrices are exact
// except where a word would leave the truncated space; identities are
// therefore checked only on the leading "interior" columns.

#include <cstddef>
#include <string>
#include <vector>

#include "cyclosc/algebra.hpp"
#include "cyclosc/matrix.hpp"

namespace cyclosc {

struct FockRep {
  AlgebraParams params;
  std::size_t dim = 0;
  CMatrix a;     // a |n> = sqrt(F(n)) |n-1>
  CMatrix adag;  // conjugate transpose of a
  CMatrix nmat;  // N
  CMatrix tmat;  // T = exp(i 2 pi N / lambda)
  std::vector<CMatrix> proj;  // P_0 ... P_{lambda-1}

  int lambda() const { return params.lambda(); }
  const CMatrix& P(long mu) const { return proj[params.residue(mu)]; }
  CMatrix identity() const { return CMatrix::identity(dim); }
};

// D = blocks * lambda; throws InvalidParams for blocks < 2.
FockRep build(const AlgebraParams& p, int blocks);

// Number of leading columns {0, ..., D-1-w} on which a word raising the level
// by at most w is unaffected by truncation. Throws DegreeTooLarge if w >= D.
std::size_t interior(const FockRep& rep, std::size_t word_degree);

// H_0 = (a a^dag + a^dag a) / 2. Its last diagonal entry carries the
// truncation artifact of a a^dag.
CMatrix h0(const FockRep& rep);

// diag(f(0), ..., f(D-1))
template <class F>
CMatrix number_function(const FockRep& rep, F&& f) {
  CMatrix m(rep.dim);
  for (std::size_t n = 0; n < rep.dim; ++n) m(n, n) = f(static_cast<long>(n));
  return m;
}

struct RelationEntry {
  enum class Expect { Zero, NonZero };

  std::string name;
  double value = 0.0;          // Frobenius norm on the interior columns
  std::size_t interior_dim = 0;
  Expect expect = Expect::Zero;

  bool operator==(const RelationEntry&) const = default;
};

// Witness entries (Expect::NonZero) must exceed this norm.
inline constexpr double kWitnessThreshold = 0.1;

struct RelationReport {
  std::vector<RelationEntry> entries;

  void add(std::string name, double value, std::size_t interior_dim,
           RelationEntry::Expect expect = RelationEntry::Expect::Zero) {
    entries.push_back({std::move(name), value, interior_dim, expect});
  }

  // Largest residual among identities that must vanish.
  double max_residual() const;

  // Every Zero entry below `tol` and every NonZero entry above kWitnessThreshold.
  bool passed(double tol) const;

  const RelationEntry* find(const std::string& name) const;

  bool operator==(const RelationReport&) const = default;
};

// Defining relations of the algebra plus a^dag a = F(N) and a a^dag = F(N+1),
// each on interior(rep, w) with w the number of ladder factors in the word.
RelationReport check_defining_relations(const FockRep& rep);

}  // namespace cyclosc
