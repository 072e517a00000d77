#pragma once

#include <stdexcept>

namespace levisim {

// Failure of a numerical procedure: path blow-up, density overflow,
// non-convergence. Distinct from argument/config errors so callers can map
// the two classes to different exit codes.
struct numerical_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace levisim
