#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "levisim/sde.hpp"

namespace levisim {

// Discretely sampled trajectory; component[0] is x, component[1] is p for
// two-dimensional systems. Timestamps are implicit: t_k = t0 + k*dt.
struct Path {
  double dt = 0.0;
  double t0 = 0.0;
  std::vector<std::vector<double>> component;

  std::size_t n_samples() const {
    return component.empty() ? 0 : component[0].size();
  }
  double time(std::size_t k) const { return t0 + static_cast<double>(k) * dt; }
};

struct EnsembleMeta {
  std::uint64_t seed = 0;
  double dt = 0.0;
  std::size_t n_steps = 0;
  std::size_t n_paths = 0;
  std::string system;
  std::vector<double> initial;
  std::size_t output_stride = 1;  // decimation applied on export
};

struct PathEnsemble {
  EnsembleMeta meta;
  std::vector<Path> paths;
};

// Stores the full trajectory (n_steps + 1 samples per component).
Path heun_integrate(const SdeSystem& system, std::span<const double> initial,
                    std::size_t n_steps, WienerStream& stream);

// Independent paths, stream_id = path index; integrated concurrently but
// assembled by index, so the result does not depend on scheduling.
PathEnsemble sample_ensemble(const SdeSystem& system,
                             std::span<const double> initial,
                             std::size_t n_steps, double dt,
                             std::size_t n_paths, std::uint64_t seed,
                             unsigned n_threads = 0);

// Centered moving average; output length is input length - window + 1.
std::vector<double> moving_average(std::span<const double> series,
                                   std::size_t window);
Path moving_average(const Path& path, std::size_t window);

// CSV export: paths/path_###.csv with header "t,x,p" (or "t,x" for 1D
// systems), plus a metadata.json sidecar recording seed, dt, system,
// initial conditions and the decimation stride.
void write_ensemble_csv(const PathEnsemble& ensemble,
                        const std::filesystem::path& dir,
                        std::size_t stride = 1);
PathEnsemble read_ensemble_csv(const std::filesystem::path& dir);

}  // namespace levisim
