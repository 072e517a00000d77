#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "levisim/errors.hpp"

namespace levisim {

template <class Observer>
void heun_integrate_observe(const SdeSystem& system,
                            std::span<const double> initial,
                            std::size_t n_steps, WienerStream& stream,
                            Observer&& observe) {
  const int n = system.dimension;
  const int m = system.noise_dimension();
  const double dt = stream.dt();

  std::vector<double> state(initial.begin(), initial.end());
  std::vector<double> predicted(n), f0(n), f1(n), g0(n * m), g1(n * m), dw(m);

  observe(std::size_t{0}, 0.0, std::span<const double>(state));
  for (std::size_t k = 0; k < n_steps; ++k) {
    const double t = static_cast<double>(k) * dt;
    stream.fill(dw);
    heun_step(system, t, dt, dw, state, predicted, f0, f1, g0, g1);
    for (int i = 0; i < n; ++i) {
      if (!std::isfinite(state[i]))
        throw numerical_error("path blow-up at step " + std::to_string(k + 1));
    }
    observe(k + 1, t + dt, std::span<const double>(state));
  }
}

}  // namespace levisim
