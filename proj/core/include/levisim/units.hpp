#pragma once

#include <string>

namespace levisim {

inline constexpr double k_hbar = 1.054571817e-34;  // J s

enum class Dimension { length, momentum, time, energy, velocity, frequency };

// Parses one of: length, momentum, time, energy, velocity, frequency.
Dimension dimension_from_string(const std::string& name);
std::string to_string(Dimension dim);

// Reference scales of the harmonic oscillator: lengths in sqrt(hbar/(m w)),
// momenta in sqrt(hbar m w), times in 1/w, energies in hbar w. Everything
// derives from (mass, omega); x0*p0 == hbar and e0*t0 == hbar by construction.
class UnitSystem {
 public:
  UnitSystem(double mass_kg, double omega_rad_s);

  double mass_kg() const { return mass_; }
  double omega_rad_s() const { return omega_; }

  double x0() const;  // m
  double p0() const;  // kg m/s
  double t0() const;  // s
  double e0() const;  // J
  double u0() const;  // m/s, p0/m

  double scale(Dimension dim) const;
  double to_si(double reduced, Dimension dim) const;
  double from_si(double si, Dimension dim) const;

 private:
  double mass_;
  double omega_;
};

}  // namespace levisim
