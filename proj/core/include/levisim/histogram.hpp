#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace levisim {

// Visitation histogram: equal-width bins spanning [min, max] of the series,
// with the normalized density (counts / (n * bin_width)).
struct Histogram {
  std::vector<double> edges;    // n_bins + 1
  std::vector<std::size_t> counts;
  std::vector<double> density;

  std::size_t n_bins() const { return counts.size(); }
  double bin_width() const { return edges[1] - edges[0]; }
  std::vector<double> centers() const;

  double integral() const;  // trapezoid over bin centers
  double mean() const;
  double variance() const;
};

Histogram histogram(std::span<const double> series, std::size_t n_bins);

}  // namespace levisim
