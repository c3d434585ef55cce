#pragma once

// Common container for the bosonized supersymmetric models and the spectral
// diagnostics shared by all variants.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cyclosc/fock.hpp"
#include "cyclosc/matrix.hpp"
#include "cyclosc/spectrum.hpp"

namespace cyclosc {

struct SsqmVariant {
  bool broken = false;
  bool operator==(const SsqmVariant&) const = default;
};

struct PssqmVariant {
  int p = 1;
  int mu = 0;
  bool operator==(const PssqmVariant&) const = default;
};

struct Pseudo1Variant {
  int mu = 0;
  double c = 1.0;
  double eta = 0.0;
  double phi = 0.0;
  double r = 0.0;  // r_{mu+2}, derived from eta and c
  bool operator==(const Pseudo1Variant&) const = default;
};

struct Pseudo2Variant {
  int mu = 0;
  double c = 1.0;
  double r = 0.0;  // r_mu, free
  bool operator==(const Pseudo2Variant&) const = default;
};

struct OssqmVariant {
  int mu = 0;
  double xi = 1.0;
  double phi = 0.0;
  bool operator==(const OssqmVariant&) const = default;
};

using ModelVariant = std::variant<SsqmVariant, PssqmVariant, Pseudo1Variant, Pseudo2Variant, OssqmVariant>;

std::string variant_name(const ModelVariant& v);

struct SusyModel {
  ModelVariant variant;
  std::vector<CMatrix> charges;
  CMatrix hamiltonian;
  std::shared_ptr<const FockRep> rep;
};

enum class EnergySign { Negative, Zero, Positive };

std::string to_string(EnergySign s);

struct GroundState {
  int degeneracy = 0;
  double energy = 0.0;
  EnergySign sign = EnergySign::Zero;
};

// Eigenvalues of the Hamiltonian on the leading D - lambda basis states,
// grouped into classes. Classes at or above the lowest diagonal energy of the
// excluded top block are dropped since their multiplets may be cut.
struct InteriorSpectrum {
  std::vector<double> eigenvalues;
  std::vector<DegeneracyClass> classes;  // complete multiplets only
  double cutoff = 0.0;
};

InteriorSpectrum interior_spectrum(const SusyModel& m, double tol = kDegeneracyTol);

// Lowest interior eigenvalue, its multiplicity, and its sign with a zero band
// of |E| < tol.
GroundState ground_state_analysis(const SusyModel& m, double tol = kDegeneracyTol);

// Common gap if the class energies form an arithmetic progression (at least
// three classes), otherwise nullopt.
std::optional<double> equal_spacing_gap(std::span<const DegeneracyClass> classes, double tol = 1e-9);

// Multiplicity shared by every class above the ground class, or nullopt.
std::optional<int> excited_multiplicity(std::span<const DegeneracyClass> classes);

// Distinct level shifts (row - column) carried by the nonzero entries of a charge.
std::vector<long> charge_shifts(const CMatrix& charge, double zero_tol = 1e-14);

}  // namespace cyclosc
