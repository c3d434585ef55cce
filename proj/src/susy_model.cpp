#include "cyclosc/susy_model.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <set>

namespace cyclosc {

std::string variant_name(const ModelVariant& v) {
  struct Visitor {
    std::string operator()(const SsqmVariant& s) const { return s.broken ? "ssqm-broken" : "ssqm-unbroken"; }
    std::string operator()(const PssqmVariant& s) const {
      return "pssqm(p=" + std::to_string(s.p) + ",mu=" + std::to_string(s.mu) + ")";
    }
    std::string operator()(const Pseudo1Variant& s) const { return "pseudo1(mu=" + std::to_string(s.mu) + ")"; }
    std::string operator()(const Pseudo2Variant& s) const { return "pseudo2(mu=" + std::to_string(s.mu) + ")"; }
    std::string operator()(const OssqmVariant& s) const { return "ossqm(mu=" + std::to_string(s.mu) + ")"; }
  };
  return std::visit(Visitor{}, v);
}

std::string to_string(EnergySign s) {
  switch (s) {
    case EnergySign::Negative: return "neg";
    case EnergySign::Zero: return "zero";
    case EnergySign::Positive: return "pos";
  }
  return "?";
}

InteriorSpectrum interior_spectrum(const SusyModel& m, double tol) {
  const std::size_t dim = m.hamiltonian.dim();
  const std::size_t keep = dim - static_cast<std::size_t>(m.rep->lambda());

  Eigen::MatrixXcd block(keep, keep);
  for (std::size_t i = 0; i < keep; ++i)
    for (std::size_t j = 0; j < keep; ++j) block(i, j) = m.hamiltonian(i, j);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(block, Eigen::EigenvaluesOnly);

  InteriorSpectrum out;
  out.eigenvalues.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + keep);
  out.cutoff = std::numeric_limits<double>::infinity();
  // The last row carries the truncation defect of a a+ and is not a true level.
  for (std::size_t n = keep; n + 1 < dim; ++n) out.cutoff = std::min(out.cutoff, m.hamiltonian(n, n).real());

  for (const auto& c : group_levels(out.eigenvalues, tol)) {
    if (c.energy < out.cutoff - tol) out.classes.push_back(c);
  }
  return out;
}

GroundState ground_state_analysis(const SusyModel& m, double tol) {
  const auto spec = interior_spectrum(m, tol);
  GroundState g;
  if (spec.classes.empty()) return g;
  g.degeneracy = spec.classes.front().multiplicity;
  g.energy = spec.classes.front().energy;
  g.sign = std::abs(g.energy) < tol ? EnergySign::Zero : (g.energy < 0 ? EnergySign::Negative : EnergySign::Positive);
  return g;
}

std::optional<double> equal_spacing_gap(std::span<const DegeneracyClass> classes, double tol) {
  if (classes.size() < 3) return std::nullopt;
  const double gap = classes[1].energy - classes[0].energy;
  for (std::size_t i = 2; i < classes.size(); ++i) {
    if (std::abs(classes[i].energy - classes[i - 1].energy - gap) > tol) return std::nullopt;
  }
  return gap;
}

std::optional<int> excited_multiplicity(std::span<const DegeneracyClass> classes) {
  if (classes.size() < 2) return std::nullopt;
  const int m = classes[1].multiplicity;
  for (std::size_t i = 2; i < classes.size(); ++i)
    if (classes[i].multiplicity != m) return std::nullopt;
  return m;
}

std::vector<long> charge_shifts(const CMatrix& charge, double zero_tol) {
  std::set<long> shifts;
  for (std::size_t i = 0; i < charge.dim(); ++i)
    for (std::size_t j = 0; j < charge.dim(); ++j)
      if (std::abs(charge(i, j)) > zero_tol) shifts.insert(static_cast<long>(i) - static_cast<long>(j));
  return {shifts.begin(), shifts.end()};
}

}  // namespace cyclosc
