#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace levisim {

// Separable CMA-ES: a (mu/mu_w, lambda) evolution strategy with cumulative
// step-size adaptation and a diagonal covariance model. Candidates with
// non-finite objective values rank last.
struct EsConfig {
  int population = 0;        // lambda; 0: 4 + floor(3 ln d)
  int max_generations = 3000;
  double tol_f = 1e-6;       // convergence: best-f improvement ...
  int patience = 60;         //   over this many generations below tol_f
  double sigma0 = 0.15;
  std::uint64_t seed = 2168461;
};

struct EsResult {
  std::vector<double> best_x;
  double best_f;
  int generations;
  bool converged;
  std::vector<double> best_history;  // best-so-far f per generation
};

EsResult minimize(const std::function<double(std::span<const double>)>& objective,
                  std::span<const double> x0, const EsConfig& config = {});

}  // namespace levisim
