#pragma once

#include <functional>
#include <string>

namespace levisim {

enum class PotentialKind { harmonic, gaussian, lorentzian, custom };

PotentialKind potential_kind_from_string(const std::string& name);
std::string to_string(PotentialKind kind);

// Trap profile in reduced units. All built-in kinds vanish at the origin,
// are even, and share the harmonic form v0*x^2/(2*x0_sq) as their
// second-order expansion. New shapes plug in as a value/gradient pair
// without touching the solver or the SDE engine.
class Potential {
 public:
  Potential(PotentialKind kind, double v0 = 1.0, double x0_sq = 1.0);

  static Potential harmonic(double v0 = 1.0, double x0_sq = 1.0);
  static Potential gaussian(double v0 = 1.0, double x0_sq = 1.0);
  static Potential lorentzian(double v0 = 1.0, double x0_sq = 1.0);
  static Potential custom(std::function<double(double)> value,
                          std::function<double(double)> gradient,
                          std::string name = "custom");

  double value(double x) const;
  double gradient(double x) const;

  PotentialKind kind() const { return kind_; }
  double v0() const { return v0_; }
  double x0_sq() const { return x0_sq_; }
  const std::string& name() const { return name_; }

 private:
  Potential() = default;

  PotentialKind kind_ = PotentialKind::custom;
  double v0_ = 1.0;
  double x0_sq_ = 1.0;
  std::string name_;
  std::function<double(double)> custom_value_;
  std::function<double(double)> custom_gradient_;
};

}  // namespace levisim
