#pragma once

#include <random>
#include <vector>

#include "cyclosc/algebra.hpp"

namespace cyclosc::testing {

// Random parameters with every beta_mu at least `margin` inside the Fock region.
inline AlgebraParams random_params(std::mt19937_64& rng, int lambda, double margin = 0.1) {
  std::uniform_real_distribution<double> dist(-1.5, 2.0);
  for (;;) {
    std::vector<double> head(static_cast<std::size_t>(lambda - 1));
    for (auto& a : head) a = dist(rng);
    double beta = 0.0;
    bool ok = true;
    for (int mu = 1; mu < lambda; ++mu) {
      beta += head[static_cast<std::size_t>(mu - 1)];
      if (beta <= -mu + margin) ok = false;
    }
    if (ok) return new_params(lambda, head);
  }
}

// Random lambda = 3 parameters with alpha_fixed = -1 at the given index.
inline AlgebraParams random_params_with(std::mt19937_64& rng, int lambda, int fixed_index, double fixed_value,
                                        double margin = 0.1) {
  std::uniform_real_distribution<double> dist(-1.5, 2.0);
  for (;;) {
    std::vector<double> alpha(static_cast<std::size_t>(lambda));
    double sum = 0.0;
    for (int mu = 0; mu < lambda - 1; ++mu) {
      alpha[static_cast<std::size_t>(mu)] = dist(rng);
    }
    alpha[static_cast<std::size_t>(fixed_index)] = fixed_value;
    for (int mu = 0; mu < lambda - 1; ++mu) sum += alpha[static_cast<std::size_t>(mu)];
    if (fixed_index == lambda - 1) {
      // Rebalance on alpha_0 so the last entry keeps its fixed value.
      alpha[0] -= sum + fixed_value;
    } else {
      alpha[static_cast<std::size_t>(lambda - 1)] = -sum;
    }
    double beta = 0.0;
    bool ok = true;
    for (int mu = 1; mu < lambda; ++mu) {
      beta += alpha[static_cast<std::size_t>(mu - 1)];
      if (beta <= -mu + margin) ok = false;
    }
    if (ok) return params_from_alpha(lambda, alpha);
  }
}

}  // namespace cyclosc::testing
