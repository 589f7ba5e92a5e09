#include "configeo/regression.hpp"

#include <cmath>

#include "configeo/error.hpp"

namespace configeo {

LineFit ols(std::span<const double> x, std::span<const double> y) {
  require(x.size() == y.size(), "ols: x and y differ in length");
  require(x.size() >= 2, "ols: need at least two samples");
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx, dy = y[i] - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }

  LineFit fit;
  fit.samples = x.size();
  if (sxx <= 0.0) {
    fit.degenerate = true;
    fit.intercept = my;
    return fit;
  }
  fit.degenerate = syy <= 0.0;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  if (x.size() > 2) {
    double sse = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double r = y[i] - (fit.intercept + fit.slope * x[i]);
      sse += r * r;
    }
    fit.stderr_slope = std::sqrt(sse / (n - 2.0) / sxx);
  }
  return fit;
}

double pairwise_sum(std::span<const double> values) {
  if (values.size() <= 8) {
    double acc = 0.0;
    for (double v : values) acc += v;
    return acc;
  }
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

}  // namespace configeo
