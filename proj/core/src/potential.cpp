#include "levisim/potential.hpp"

#include <cmath>
#include <stdexcept>

namespace levisim {

PotentialKind potential_kind_from_string(const std::string& name) {
  if (name == "harmonic") return PotentialKind::harmonic;
  if (name == "gaussian") return PotentialKind::gaussian;
  if (name == "lorentzian") return PotentialKind::lorentzian;
  throw std::invalid_argument("unknown potential kind: " + name);
}

std::string to_string(PotentialKind kind) {
  switch (kind) {
    case PotentialKind::harmonic: return "harmonic";
    case PotentialKind::gaussian: return "gaussian";
    case PotentialKind::lorentzian: return "lorentzian";
    case PotentialKind::custom: return "custom";
  }
  throw std::invalid_argument("unknown potential kind");
}

Potential::Potential(PotentialKind kind, double v0, double x0_sq)
    : kind_(kind), v0_(v0), x0_sq_(x0_sq), name_(to_string(kind)) {
  if (kind == PotentialKind::custom)
    throw std::invalid_argument("use Potential::custom for custom potentials");
  if (!(v0 > 0.0) || !std::isfinite(v0))
    throw std::invalid_argument("Potential: v0 must be positive");
  if (!(x0_sq > 0.0) || !std::isfinite(x0_sq))
    throw std::invalid_argument("Potential: x0_sq must be positive");
}

Potential Potential::harmonic(double v0, double x0_sq) {
  return Potential(PotentialKind::harmonic, v0, x0_sq);
}
Potential Potential::gaussian(double v0, double x0_sq) {
  return Potential(PotentialKind::gaussian, v0, x0_sq);
}
Potential Potential::lorentzian(double v0, double x0_sq) {
  return Potential(PotentialKind::lorentzian, v0, x0_sq);
}

Potential Potential::custom(std::function<double(double)> value,
                            std::function<double(double)> gradient,
                            std::string name) {
  if (!value || !gradient)
    throw std::invalid_argument("Potential::custom: value and gradient required");
  Potential p;
  p.kind_ = PotentialKind::custom;
  p.name_ = std::move(name);
  p.custom_value_ = std::move(value);
  p.custom_gradient_ = std::move(gradient);
  return p;
}

double Potential::value(double x) const {
  if (!std::isfinite(x))
    throw std::invalid_argument("Potential::value: non-finite x");
  const double q = x * x / (2.0 * x0_sq_);
  switch (kind_) {
    case PotentialKind::harmonic: return v0_ * q;
    case PotentialKind::gaussian: return v0_ * (1.0 - std::exp(-q));
    case PotentialKind::lorentzian: return v0_ * (1.0 - 1.0 / (q + 1.0));
    case PotentialKind::custom: return custom_value_(x);
  }
  throw std::logic_error("unreachable");
}

double Potential::gradient(double x) const {
  if (!std::isfinite(x))
    throw std::invalid_argument("Potential::gradient: non-finite x");
  const double q = x * x / (2.0 * x0_sq_);
  const double dq = x / x0_sq_;
  switch (kind_) {
    case PotentialKind::harmonic: return v0_ * dq;
    case PotentialKind::gaussian: return v0_ * dq * std::exp(-q);
    case PotentialKind::lorentzian: return v0_ * dq / ((q + 1.0) * (q + 1.0));
    case PotentialKind::custom: return custom_gradient_(x);
  }
  throw std::logic_error("unreachable");
}

}  // namespace levisim
