#include "cyclosc/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cyclosc/errors.hpp"
#include "cyclosc/parallel.hpp"

namespace cyclosc {

namespace {

std::string join(std::span<const int> values) {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i) out << (i ? "," : "") << values[i];
  return out.str();
}

// All levels with k < k_max, sorted.
std::vector<Level> enumerate_levels(const AlgebraParams& p, long k_max) {
  std::vector<Level> levels;
  levels.reserve(static_cast<std::size_t>(k_max) * p.lambda());
  for (int mu = 0; mu < p.lambda(); ++mu)
    for (long k = 0; k < k_max; ++k) levels.push_back({energy(p, k, mu), k, mu});
  std::sort(levels.begin(), levels.end(), [](const Level& x, const Level& y) {
    if (x.energy != y.energy) return x.energy < y.energy;
    if (x.mu != y.mu) return x.mu < y.mu;
    return x.k < y.k;
  });
  return levels;
}

}  // namespace

std::string describe(const DegeneracyPattern& pattern) {
  struct Visitor {
    std::string operator()(const Nondegenerate&) const { return "nondegenerate"; }
    std::string operator()(const FoldAbove& f) const {
      std::ostringstream out;
      out << f.multiplicity << "-fold";
      if (std::isfinite(f.threshold)) out << " above E=" << f.threshold;
      return out.str();
    }
    std::string operator()(const Mixed& m) const { return m.description; }
  };
  return std::visit(Visitor{}, pattern);
}

std::vector<DegeneracyClass> group_levels(std::span<const double> sorted_energies, double tol) {
  std::vector<DegeneracyClass> classes;
  for (double e : sorted_energies) {
    if (!classes.empty() && e - classes.back().energy <= tol) {
      ++classes.back().multiplicity;
    } else {
      classes.push_back({e, 1});
    }
  }
  return classes;
}

DegeneracyPattern classify_classes(std::span<const DegeneracyClass> classes) {
  if (classes.empty()) return Nondegenerate{};
  const std::size_t tail_len = (classes.size() + 1) / 2;
  const auto tail = classes.subspan(classes.size() - tail_len);

  std::vector<int> tail_mult;
  for (const auto& c : tail) tail_mult.push_back(c.multiplicity);
  std::sort(tail_mult.begin(), tail_mult.end());
  tail_mult.erase(std::unique(tail_mult.begin(), tail_mult.end()), tail_mult.end());

  if (tail_mult.size() != 1) {
    return Mixed{"mixed multiplicities {" + join(tail_mult) + "} in the upper spectrum", tail_mult};
  }
  const int m = tail_mult.front();
  double threshold = -std::numeric_limits<double>::infinity();
  for (const auto& c : classes)
    if (c.multiplicity != m) threshold = std::max(threshold, c.energy);

  if (m == 1) {
    if (!std::isfinite(threshold)) return Nondegenerate{};
    std::ostringstream out;
    out << "nondegenerate above E=" << threshold << " with degenerate low levels";
    return Mixed{out.str(), tail_mult};
  }
  return FoldAbove{m, threshold};
}

SpectrumReport spectrum(const AlgebraParams& p, std::size_t n_levels, double tol) {
  if (n_levels < static_cast<std::size_t>(p.lambda())) {
    throw InvalidParams("need at least lambda = " + std::to_string(p.lambda()) + " levels");
  }
  // Each residue contributes one level per k; n_levels + 1 per residue always
  // covers the lowest n_levels + 1 overall.
  const auto all = enumerate_levels(p, static_cast<long>(n_levels) + 1);

  SpectrumReport report;
  report.levels.assign(all.begin(), all.begin() + static_cast<long>(n_levels));
  std::vector<double> energies;
  for (const auto& l : report.levels) energies.push_back(l.energy);
  report.classes = group_levels(energies, tol);
  report.last_class_complete = all[n_levels].energy - report.classes.back().energy > tol;

  std::span<const DegeneracyClass> complete(report.classes);
  if (!report.last_class_complete) complete = complete.first(complete.size() - 1);
  report.pattern = classify_classes(complete);
  return report;
}

DegeneracyPattern classify_degeneracy(const AlgebraParams& p, std::size_t n_levels, double tol) {
  if (n_levels < 3 * static_cast<std::size_t>(p.lambda())) {
    throw InvalidParams("classification needs at least 3 lambda levels");
  }
  return spectrum(p, n_levels, tol).pattern;
}

std::vector<double> GridAxis::points() const {
  if (!(step > 0.0)) throw InvalidParams("grid step must be positive");
  std::vector<double> out;
  if (hi < lo) return out;
  const double span = (hi - lo) / step;
  const auto count = static_cast<long>(std::floor(span + 1e-9 * std::max(1.0, std::abs(span)))) + 1;
  for (long i = 0; i < count; ++i) out.push_back(lo + static_cast<double>(i) * step);
  return out;
}

std::vector<ScanRow> scan_grid(int lambda, std::span<const GridAxis> axes, std::size_t n_levels, double tol) {
  if (lambda < 2) throw InvalidParams("lambda must be >= 2");
  if (axes.size() != static_cast<std::size_t>(lambda - 1)) {
    throw InvalidParams("scan needs one axis per free alpha (" + std::to_string(lambda - 1) + ")");
  }
  std::vector<std::vector<double>> pts;
  std::size_t total = axes.empty() ? 0 : 1;
  for (const auto& ax : axes) {
    pts.push_back(ax.points());
    total *= pts.back().size();
  }

  std::vector<ScanRow> rows(total);
  parallel_for(total, [&](std::size_t flat) {
    ScanRow row;
    row.alpha_head.resize(pts.size());
    std::size_t rem = flat;
    for (std::size_t d = pts.size(); d-- > 0;) {
      row.alpha_head[d] = pts[d][rem % pts[d].size()];
      rem /= pts[d].size();
    }
    std::vector<double> alpha = row.alpha_head;
    double s = 0.0;
    for (double v : alpha) s += v;
    alpha.push_back(-s);
    if (auto mu = fock_violation(alpha)) {
      row.fock_violation = *mu;
    } else {
      row.pattern = classify_degeneracy(params_from_alpha(lambda, alpha), n_levels, tol);
    }
    rows[flat] = std::move(row);
  });
  return rows;
}

}  // namespace cyclosc
