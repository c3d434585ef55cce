#include "cyclosc/fock.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cyclosc/errors.hpp"

namespace cyclosc {

FockRep build(const AlgebraParams& p, int blocks) {
  if (blocks < 2) throw InvalidParams("need at least 2 blocks, got " + std::to_string(blocks));
  const int lambda = p.lambda();
  const std::size_t dim = static_cast<std::size_t>(blocks) * static_cast<std::size_t>(lambda);

  FockRep rep{p, dim, CMatrix(dim), CMatrix(dim), CMatrix(dim), CMatrix(dim), {}};
  for (std::size_t n = 1; n < dim; ++n) rep.a(n - 1, n) = std::sqrt(structure_function(p, static_cast<long>(n)));
  rep.adag = rep.a.adjoint();
  for (std::size_t n = 0; n < dim; ++n) {
    rep.nmat(n, n) = static_cast<double>(n);
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(n % lambda) / lambda;
    rep.tmat(n, n) = cplx(std::cos(angle), std::sin(angle));
  }
  rep.proj.assign(lambda, CMatrix(dim));
  for (std::size_t n = 0; n < dim; ++n) rep.proj[n % lambda](n, n) = 1.0;
  return rep;
}

std::size_t interior(const FockRep& rep, std::size_t word_degree) {
  if (word_degree >= rep.dim) {
    throw DegreeTooLarge("word degree " + std::to_string(word_degree) + " leaves no interior in dimension " +
                         std::to_string(rep.dim));
  }
  return rep.dim - word_degree;
}

CMatrix h0(const FockRep& rep) {
  CMatrix h = rep.a * rep.adag + rep.adag * rep.a;
  h *= 0.5;
  return h;
}

double RelationReport::max_residual() const {
  double worst = 0.0;
  for (const auto& e : entries)
    if (e.expect == RelationEntry::Expect::Zero) worst = std::max(worst, e.value);
  return worst;
}

bool RelationReport::passed(double tol) const {
  return std::all_of(entries.begin(), entries.end(), [tol](const RelationEntry& e) {
    return e.expect == RelationEntry::Expect::Zero ? e.value < tol : e.value > kWitnessThreshold;
  });
}

const RelationEntry* RelationReport::find(const std::string& name) const {
  auto it = std::find_if(entries.begin(), entries.end(), [&](const RelationEntry& e) { return e.name == name; });
  return it == entries.end() ? nullptr : &*it;
}

RelationReport check_defining_relations(const FockRep& rep) {
  const auto& p = rep.params;
  const int lambda = p.lambda();
  const CMatrix id = rep.identity();
  RelationReport report;

  const std::size_t w0 = interior(rep, 0);
  const std::size_t w1 = interior(rep, 1);
  const std::size_t w2 = interior(rep, 2);

  report.add("[N,a+] = a+", residual_norm(commutator(rep.nmat, rep.adag), rep.adag, w1), w1);

  double np = 0.0, grading = 0.0, idem = 0.0;
  CMatrix sum_p(rep.dim);
  for (int mu = 0; mu < lambda; ++mu) {
    np = std::max(np, column_norm(commutator(rep.nmat, rep.P(mu)), w0));
    grading = std::max(grading, residual_norm(rep.adag * rep.P(mu), rep.P(mu + 1) * rep.adag, w1));
    for (int nu = 0; nu < lambda; ++nu) {
      const CMatrix expected = mu == nu ? rep.P(mu) : CMatrix(rep.dim);
      idem = std::max(idem, residual_norm(rep.P(mu) * rep.P(nu), expected, w0));
    }
    sum_p += rep.P(mu);
  }
  report.add("[N,P_mu] = 0", np, w0);
  report.add("sum_mu P_mu = I", residual_norm(sum_p, id, w0), w0);

  CMatrix g = id;
  for (int mu = 0; mu < lambda; ++mu) g.add_scaled(p.alpha()[mu], rep.P(mu));
  report.add("[a,a+] = I + sum_mu alpha_mu P_mu", residual_norm(commutator(rep.a, rep.adag), g, w2), w2);
  report.add("a+ P_mu = P_(mu+1) a+", grading, w1);
  report.add("P_mu P_nu = delta_mu,nu P_mu", idem, w0);

  const CMatrix f_n = number_function(rep, [&](long n) { return cplx(structure_function(p, n)); });
  const CMatrix f_n1 = number_function(rep, [&](long n) { return cplx(structure_function(p, n + 1)); });
  report.add("a+ a = F(N)", residual_norm(rep.adag * rep.a, f_n, w2), w2);
  report.add("a a+ = F(N+1)", residual_norm(rep.a * rep.adag, f_n1, w2), w2);

  // Cyclic-group form of the same algebra.
  const double angle = -2.0 * std::numbers::pi / lambda;
  const cplx phase(std::cos(angle), std::sin(angle));
  report.add("T^lambda = I", residual_norm(power(rep.tmat, static_cast<unsigned>(lambda)), id, w0), w0);
  report.add("a+ T = exp(-i 2 pi/lambda) T a+", residual_norm(rep.adag * rep.tmat, phase * (rep.tmat * rep.adag), w1), w1);
  return report;
}

}  // namespace cyclosc
