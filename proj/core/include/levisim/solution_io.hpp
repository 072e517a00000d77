#pragma once

#include <filesystem>

#include "levisim/groundstate.hpp"
#include "levisim/potential.hpp"

namespace levisim {

// JSON-shaped ground-state file: potential, grid, spline knots, u and rho on
// the grid, energy and uncertainties. Tabulated fields round-trip exactly
// through their knots.
void save_solution(const GroundStateSolution& solution, const Potential& pot,
                   const std::filesystem::path& file);

struct LoadedSolution {
  GroundStateSolution solution;
  Potential potential;
};

LoadedSolution load_solution(const std::filesystem::path& file);

}  // namespace levisim
