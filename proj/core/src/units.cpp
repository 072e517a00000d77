#include "levisim/units.hpp"

#include <cmath>
#include <stdexcept>

namespace levisim {

Dimension dimension_from_string(const std::string& name) {
  if (name == "length") return Dimension::length;
  if (name == "momentum") return Dimension::momentum;
  if (name == "time") return Dimension::time;
  if (name == "energy") return Dimension::energy;
  if (name == "velocity") return Dimension::velocity;
  if (name == "frequency") return Dimension::frequency;
  throw std::invalid_argument("unknown dimension: " + name);
}

std::string to_string(Dimension dim) {
  switch (dim) {
    case Dimension::length: return "length";
    case Dimension::momentum: return "momentum";
    case Dimension::time: return "time";
    case Dimension::energy: return "energy";
    case Dimension::velocity: return "velocity";
    case Dimension::frequency: return "frequency";
  }
  throw std::invalid_argument("unknown dimension");
}

UnitSystem::UnitSystem(double mass_kg, double omega_rad_s)
    : mass_(mass_kg), omega_(omega_rad_s) {
  if (!(mass_ > 0.0) || !std::isfinite(mass_))
    throw std::invalid_argument("UnitSystem: mass must be positive");
  if (!(omega_ > 0.0) || !std::isfinite(omega_))
    throw std::invalid_argument("UnitSystem: omega must be positive");
}

double UnitSystem::x0() const { return std::sqrt(k_hbar / (mass_ * omega_)); }
double UnitSystem::p0() const { return std::sqrt(k_hbar * mass_ * omega_); }
double UnitSystem::t0() const { return 1.0 / omega_; }
double UnitSystem::e0() const { return k_hbar * omega_; }
double UnitSystem::u0() const { return p0() / mass_; }

double UnitSystem::scale(Dimension dim) const {
  switch (dim) {
    case Dimension::length: return x0();
    case Dimension::momentum: return p0();
    case Dimension::time: return t0();
    case Dimension::energy: return e0();
    case Dimension::velocity: return u0();
    case Dimension::frequency: return omega_;  // reduced f is per unit of t0
  }
  throw std::invalid_argument("unknown dimension");
}

double UnitSystem::to_si(double reduced, Dimension dim) const {
  return reduced * scale(dim);
}

double UnitSystem::from_si(double si, Dimension dim) const {
  return si / scale(dim);
}

}  // namespace levisim
