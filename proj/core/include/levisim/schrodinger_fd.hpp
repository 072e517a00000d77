#pragma once

#include <vector>

#include "levisim/grid.hpp"
#include "levisim/osmotic_field.hpp"
#include "levisim/potential.hpp"

namespace levisim {

// Lowest eigenpair of the finite-difference Hamiltonian -psi''/2 + V psi
// (reduced units, Dirichlet boundaries). Independent of the variational
// solver: the eigenvalue comes from Sturm-sequence bisection on the
// tridiagonal matrix, the eigenvector from inverse iteration.
struct FdGroundState {
  double energy;            // in units of hbar*omega
  Grid grid;
  std::vector<double> psi;  // normalized, int psi^2 dx = 1, max positive
  std::vector<double> u;    // 0.5 d ln(psi^2)/dx, linearly extended where
                            // psi is below resolution
};

// Throws numerical_error("grid too small") when |psi| at the boundaries
// exceeds 1e-8 of its maximum.
FdGroundState schrodinger_fd_oracle(const Potential& pot, const Grid& grid);

// Tabulated field over the resolvable interior of the oracle's u.
OsmoticField field_from_fd(const FdGroundState& fd);

}  // namespace levisim
