#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace levisim {

// Uniform 1D grid, symmetric about 0 by default.
class Grid {
 public:
  Grid(double x_min, double x_max, std::size_t n_points);
  static Grid symmetric(double half_width, std::size_t n_points);

  double x_min() const { return x_min_; }
  double x_max() const { return x_max_; }
  std::size_t size() const { return points_.size(); }
  double spacing() const { return spacing_; }
  double x(std::size_t i) const { return points_[i]; }
  const std::vector<double>& points() const { return points_; }

 private:
  double x_min_;
  double x_max_;
  double spacing_;
  std::vector<double> points_;
};

double trapezoid(std::span<const double> y, double h);

// Running trapezoid integral; result[0] = 0, same length as the input.
std::vector<double> cumulative_trapezoid(std::span<const double> y, double h);

}  // namespace levisim
