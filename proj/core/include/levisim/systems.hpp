#pragma once

#include "levisim/osmotic_field.hpp"
#include "levisim/sde.hpp"

namespace levisim {

// Coupled forward system for the stationary ground state, state (x, p):
//   dx = u(x) dt + dW
//   dp = (u'(x) p + u''(x)/2) dt + u'(x) dW
// with one shared increment; p is the osmotic velocity in reduced units.
SdeSystem ground_state_system(const OsmoticField& u);

// The harmonic special case u = -x: position and momentum decouple into
// Ornstein-Uhlenbeck components dx = -x dt + dW, dp = -p dt - dW (same
// increment, opposite sign on p).
SdeSystem ou_system();

// Closed-form classical orbit used by the coherent-state system:
// conservative (A sin t, A cos t) or exponentially damped by exp(-t/t_d).
class ClassicalTrajectory {
 public:
  enum class Kind { conservative, damped };

  double x(double t) const;
  double p(double t) const;
  double dx_dt(double t) const;
  double dp_dt(double t) const;

  Kind kind() const { return kind_; }
  double amplitude() const { return amplitude_; }
  double damping_time() const { return t_d_; }

  friend ClassicalTrajectory conservative_trajectory(double amplitude);
  friend ClassicalTrajectory cooling_trajectory(double amplitude, double t_d);

 private:
  Kind kind_ = Kind::conservative;
  double amplitude_ = 0.0;
  double t_d_ = 0.0;
};

ClassicalTrajectory conservative_trajectory(double amplitude);

// Damped orbit x = A sin(t) e^{-t/t_d}, p = A cos(t) e^{-t/t_d} (reduced
// units, t_d > 0); the frequency shift of the damped oscillator is
// neglected. Derivatives follow the product rule.
ClassicalTrajectory cooling_trajectory(double amplitude, double t_d);

// Ground-state fluctuations around a classical orbit, state (x, p):
//   dx = (p_cl(t) - (x - x_cl(t))) dt + dW
//   dp = (-p + x_cl'(t) + p_cl'(t)) dt - dW
// shared increment. A zero trajectory reduces this to ou_system().
SdeSystem coherent_system(const ClassicalTrajectory& trajectory);

}  // namespace levisim
