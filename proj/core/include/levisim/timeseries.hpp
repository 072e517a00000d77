#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <vector>

#include "levisim/units.hpp"

namespace levisim {

// ACF or PSD estimate on a uniform axis (lags or frequencies, reduced units).
struct Spectrum {
  enum class Kind { acf, psd };

  Kind kind = Kind::acf;
  std::vector<double> axis;
  std::vector<double> values;
  std::size_t n_windows = 0;               // windows averaged by the estimator
  std::optional<double> noise_floor;

  double axis_spacing() const { return axis.size() > 1 ? axis[1] - axis[0] : 0.0; }
};

// Mean-subtracted autocorrelation, normalized so ACF(0) = 1, averaged over
// windows whose starting points advance by window_stride samples (the last
// window ends at the end of the series). Lags run 0 .. max_lag samples
// (clamped to the series length). Throws on a constant series.
Spectrum autocorrelation(std::span<const double> series, double dt,
                         std::size_t window_stride = 1000,
                         std::size_t max_lag = 100000);

// Wiener-Khinchin transform of the truncated ACF (DCT-I under even
// extension): S(f_k) = dt * [r_0 + 2 sum r_j cos(pi j k / L) + (-1)^k r_L],
// the trapezoid discretization of S(f) = int r(tau) cos(2 pi f tau) dtau
// over the whole axis. Frequencies f_k = k / (2 L dt) in reduced units.
// With this normalization 2 * trapezoid(S) df = ACF(0) exactly (Parseval).
Spectrum power_spectral_density(const Spectrum& acf);

// Additive white experimental noise floor.
Spectrum add_noise_floor(const Spectrum& psd, double level);

// Frequency where a monotonically decaying PSD crosses the given level
// (linear interpolation between bins). Throws if the crossing is missing
// or not unique.
double crossover_frequency(const Spectrum& psd, double level);

// CSV export: "lag,value" or "freq,value"; the unit system, when given,
// converts the axis (and PSD values) to SI.
void write_spectrum_csv(const Spectrum& spectrum,
                        const std::filesystem::path& file,
                        const UnitSystem* si = nullptr);

}  // namespace levisim
