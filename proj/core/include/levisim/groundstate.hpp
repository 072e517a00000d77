#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "levisim/errors.hpp"
#include "levisim/grid.hpp"
#include "levisim/histogram.hpp"
#include "levisim/osmotic_field.hpp"
#include "levisim/potential.hpp"

namespace levisim {

// Ground-state density induced by an osmotic velocity field,
// rho(x) = N exp(2 int_0^x u), normalized to unit trapezoid integral.
// Throws numerical_error("non-normalizable density") when the exponent
// overflows (non-confining u).
std::vector<double> density_from_osmotic(const OsmoticField& u, const Grid& grid);

// Stochastic energy E[u] = int (u^2/2 + V) rho dx in reduced units.
double expected_energy(const OsmoticField& u, const Potential& pot, const Grid& grid);

struct Uncertainties {
  double sigma_x;
  double sigma_p;
  double product;  // in units of hbar
};

// Standard deviations from sampled position/momentum densities. Both inputs
// must integrate to 1 within 1e-3.
Uncertainties uncertainties(const Histogram& rho_x, const Histogram& rho_p);

// Same moments by quadrature over the induced density: sigma_x from rho,
// sigma_p from the pushforward of rho under u (exact for real ground states).
Uncertainties quadrature_uncertainties(const OsmoticField& u, const Grid& grid);

struct GroundStateSolution {
  OsmoticField u0;
  Grid grid;
  std::vector<double> u_values;  // u0 on the grid
  std::vector<double> rho;       // normalized density on the grid
  double energy = 0.0;           // in units of hbar*omega
  Uncertainties unc{0, 0, 0};
  std::string method;            // "variational-es" or "fd-oracle"
  int iterations = 0;
  bool converged = false;
};

struct SolverConfig {
  std::size_t n_knots = 24;        // free spline knots on (0, x_max]
  double tol_energy = 1e-6;        // convergence: best-energy improvement
  int patience = 60;               //   over this many generations below tol
  int max_generations = 3000;
  double sigma0 = 0.15;            // initial mutation step
  int population = 0;              // 0: default 4 + floor(3 ln d)
  std::uint64_t seed = 2168461;
};

struct convergence_error : numerical_error {
  convergence_error(const std::string& msg, GroundStateSolution best_so_far)
      : numerical_error(msg), best(std::move(best_so_far)) {}
  GroundStateSolution best;
};

// Minimizes the stochastic energy over odd spline-tabulated fields,
// initialized at the harmonic guess u = -x. Throws convergence_error
// (carrying the best solution found) if the budget runs out first.
GroundStateSolution solve_ground_state(const Potential& pot, const Grid& grid,
                                       const SolverConfig& config = {});

}  // namespace levisim
