#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <string>

namespace levisim {

// Ito system dX = f(t, X) dt + G(t, X) dW. The diffusion writes a
// dimension x noise_dimension matrix (row-major); with shared_noise all
// components consume the same Wiener increment (noise_dimension == 1).
struct SdeSystem {
  int dimension = 1;
  bool shared_noise = false;
  std::string name;
  std::function<void(double t, std::span<const double> state,
                     std::span<double> out)> drift;
  std::function<void(double t, std::span<const double> state,
                     std::span<double> out)> diffusion;

  int noise_dimension() const { return shared_noise ? 1 : dimension; }
};

// Discretized Wiener process: i.i.d. N(0, dt) increments, reproducible from
// (seed, stream_id). Paths of an ensemble use stream_id = path index.
class WienerStream {
 public:
  WienerStream(std::uint64_t seed, std::uint64_t stream_id, double dt);

  double dt() const { return dt_; }
  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_id_; }

  double next() { return gauss_(rng_) * sqrt_dt_; }
  void fill(std::span<double> increments);

 private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  double dt_;
  double sqrt_dt_;
  std::mt19937_64 rng_;
  std::normal_distribution<double> gauss_;
};

// One Heun predictor-corrector step. The predictor is an Euler-Maruyama
// step; the corrector averages drift and diffusion at the current and
// predicted states, reusing the same Wiener increment. Scratch buffers are
// caller-provided so the hot loop stays allocation-free:
// f0,f1: dimension; g0,g1: dimension*noise_dim; predicted: dimension.
void heun_step(const SdeSystem& system, double t, double dt,
               std::span<const double> dw, std::span<double> state,
               std::span<double> predicted, std::span<double> f0,
               std::span<double> f1, std::span<double> g0,
               std::span<double> g1);

// Integrates n_steps and calls observe(step, t, state) for every state
// including the initial one (step = 0 .. n_steps). Throws
// numerical_error("path blow-up ...") with the step index if a state stops
// being finite.
template <class Observer>
void heun_integrate_observe(const SdeSystem& system,
                            std::span<const double> initial,
                            std::size_t n_steps, WienerStream& stream,
                            Observer&& observe);

}  // namespace levisim

#include "levisim/detail/heun_impl.hpp"
