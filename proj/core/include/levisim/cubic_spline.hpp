#pragma once

#include <cstddef>
#include <vector>

namespace levisim {

// Natural cubic spline with analytic first and second derivatives.
// Outside the knot range the curve continues linearly with the boundary
// slope; the natural end conditions make the second derivative continuous
// (zero) across the boundary.
class CubicSpline {
 public:
  CubicSpline() = default;
  CubicSpline(std::vector<double> x, std::vector<double> y);

  double value(double x) const;
  double derivative(double x) const;
  double second_derivative(double x) const;

  const std::vector<double>& knots() const { return x_; }
  const std::vector<double>& knot_values() const { return y_; }
  bool empty() const { return x_.empty(); }

 private:
  std::size_t interval(double x) const;

  std::vector<double> x_;
  std::vector<double> y_;
  std::vector<double> m_;  // second derivatives at the knots
};

}  // namespace levisim
