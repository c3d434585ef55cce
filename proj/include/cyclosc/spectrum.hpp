#pragma once

// Oscillator spectrum E_{k lambda + mu} = k lambda + mu + gamma_mu + 1/2 and
// empirical classification of its degeneracy pattern.

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "cyclosc/algebra.hpp"

namespace cyclosc {

inline constexpr double kDegeneracyTol = 1e-9;

struct Level {
  double energy = 0.0;
  long k = 0;
  int mu = 0;
  bool operator==(const Level&) const = default;
};

struct DegeneracyClass {
  double energy = 0.0;  // lowest member
  int multiplicity = 0;
  bool operator==(const DegeneracyClass&) const = default;
};

struct Nondegenerate {
  bool operator==(const Nondegenerate&) const = default;
};

// Every class with energy > threshold has exactly `multiplicity` members.
// threshold is -infinity when the whole spectrum is uniform.
struct FoldAbove {
  int multiplicity = 0;
  double threshold = -std::numeric_limits<double>::infinity();
  bool operator==(const FoldAbove&) const = default;
};

struct Mixed {
  std::string description;
  std::vector<int> tail_multiplicities;  // distinct, ascending
  bool operator==(const Mixed&) const = default;
};

using DegeneracyPattern = std::variant<Nondegenerate, FoldAbove, Mixed>;

std::string describe(const DegeneracyPattern& pattern);

struct SpectrumReport {
  std::vector<Level> levels;            // ascending energy, ties by (mu, k)
  std::vector<DegeneracyClass> classes;  // multiplicities sum to levels.size()
  bool last_class_complete = true;       // false if the cut splits the top class
  DegeneracyPattern pattern;
  bool operator==(const SpectrumReport&) const = default;
};

// Groups ascending energies into classes: a value joins the current class if
// it lies within `tol` of the class's lowest member.
std::vector<DegeneracyClass> group_levels(std::span<const double> sorted_energies, double tol);

// Pattern of a list of complete classes. The uniform tail is judged on the
// upper half (rounded up) of the classes.
DegeneracyPattern classify_classes(std::span<const DegeneracyClass> classes);

// The n_levels lowest oscillator levels. Throws InvalidParams if n_levels < lambda.
SpectrumReport spectrum(const AlgebraParams& p, std::size_t n_levels, double tol = kDegeneracyTol);

// Throws InvalidParams if n_levels < 3 lambda.
DegeneracyPattern classify_degeneracy(const AlgebraParams& p, std::size_t n_levels, double tol = kDegeneracyTol);

struct GridAxis {
  double lo = 0.0;
  double hi = 0.0;
  double step = 0.1;

  // lo, lo + step, ..., up to hi inclusive (with 1e-9 relative slack).
  std::vector<double> points() const;
};

struct ScanRow {
  std::vector<double> alpha_head;
  std::optional<int> fock_violation;        // set for infeasible points
  std::optional<DegeneracyPattern> pattern;  // set for feasible points
  bool operator==(const ScanRow&) const = default;
};

// One axis per free parameter alpha_0 ... alpha_{lambda-2}; rows in
// lexicographic order of grid indices (first axis outermost).
std::vector<ScanRow> scan_grid(int lambda, std::span<const GridAxis> axes, std::size_t n_levels,
                               double tol = kDegeneracyTol);

}  // namespace cyclosc
