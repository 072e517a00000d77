#pragma once

#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "levisim/cubic_spline.hpp"

namespace levisim {

// Osmotic velocity field u(x) together with the derivatives u' and u''
// required by the coupled forward SDEs. Tabulated fields interpolate with a
// cubic spline between knots and continue linearly with the boundary slope
// outside (u'' = 0 there). Cheap to copy.
class OsmoticField {
 public:
  OsmoticField() = default;

  // Knots strictly increasing, at least two.
  static OsmoticField tabulated(std::vector<double> knots_x,
                                std::vector<double> knots_u);

  // Builds an odd field from knots on the positive half-axis (0 excluded,
  // ascending): u(-x) = -u(x) and u(0) = 0 hold by construction.
  static OsmoticField odd_tabulated(std::span<const double> x_positive,
                                    std::span<const double> u_positive);

  static OsmoticField analytic(std::function<double(double)> u,
                               std::function<double(double)> du,
                               std::function<double(double)> d2u,
                               std::string name = "analytic");

  // The harmonic ground-state field u(x) = -x.
  static OsmoticField harmonic();

  double value(double x) const;
  double derivative(double x) const;
  double second_derivative(double x) const;

  bool is_tabulated() const;
  const CubicSpline& spline() const;  // tabulated fields only
  const std::string& name() const;

  explicit operator bool() const { return impl_ != nullptr; }

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

}  // namespace levisim
