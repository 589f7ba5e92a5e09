#pragma once

#include <span>

namespace configeo {

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double stderr_slope = 0.0;
  std::size_t samples = 0;
  bool degenerate = false;  // all y equal or all x equal
};

/// Ordinary least squares y = intercept + slope * x.
/// Requires at least two samples; stderr_slope is 0 for exactly two.
LineFit ols(std::span<const double> x, std::span<const double> y);

/// Pairwise (tree) summation. The result depends only on the input order.
double pairwise_sum(std::span<const double> values);

}  // namespace configeo
