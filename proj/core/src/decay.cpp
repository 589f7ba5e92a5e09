#include <algorithm>
#include <cmath>

#include "configeo/error.hpp"
#include "configeo/fourier.hpp"
#include "configeo/regression.hpp"

namespace configeo::fourier {

namespace {

void check_radii(std::span<const double> radii) {
  require(radii.size() >= 5, "decay fit needs at least 5 radii");
  require(radii.front() > 0.0, "decay fit radii must be positive");
  for (std::size_t i = 1; i < radii.size(); ++i) {
    require(radii[i] > radii[i - 1], "decay fit radii must be strictly increasing");
  }
  require(radii.back() >= 10.0 * radii.front() * (1.0 - 1e-12),
          "decay fit radii must span at least one decade");
}

}  // namespace

DecayReport decay_fit(std::span<const double> radii, std::span<const double> magnitudes,
                      const DecayFitOptions& options) {
  check_radii(radii);
  require(magnitudes.size() == radii.size(), "one magnitude per radius is required");
  require(options.bins_per_decade >= 1, "bins_per_decade must be positive");
  require(options.min_bin_width >= 0.0, "min_bin_width must be nonnegative");

  DecayReport report;
  report.radii.assign(radii.begin(), radii.end());
  report.magnitudes.reserve(magnitudes.size());
  for (double m : magnitudes) {
    require(std::isfinite(m), "decay fit magnitudes must be finite");
    report.magnitudes.push_back(std::abs(m));
  }

  // Logarithmic bins anchored at the first radius; a bin is closed once it
  // spans the log width and the absolute minimum width.
  const double log_width = 1.0 / static_cast<double>(options.bins_per_decade);
  std::size_t start = 0;
  while (start < radii.size()) {
    const double lo = radii[start];
    std::size_t end = start;
    double best = -1.0, best_r = 0.0;
    while (end < radii.size() &&
           (std::log10(radii[end] / lo) < log_width || radii[end] - lo < options.min_bin_width)) {
      const double m = report.magnitudes[end];
      if (m >= options.floor && m > best) {
        best = m;
        best_r = radii[end];
      }
      ++end;
    }
    // A trailing bin narrower than the others has no peak guarantee.
    const bool complete = end < radii.size() || start == 0;
    if (best > 0.0 && complete) {
      report.envelope_radii.push_back(best_r);
      report.envelope_magnitudes.push_back(best);
    }
    start = end;
  }

  if (report.envelope_radii.size() < 3) {
    report.inconclusive = true;
    return report;
  }
  std::vector<double> x, y;
  for (std::size_t i = 0; i < report.envelope_radii.size(); ++i) {
    x.push_back(std::log(report.envelope_radii[i]));
    y.push_back(std::log(report.envelope_magnitudes[i]));
  }
  const LineFit fit = ols(x, y);
  if (fit.degenerate) {
    report.inconclusive = true;
    return report;
  }
  report.fitted_exponent = -fit.slope;
  report.stderr_exponent = fit.stderr_slope;
  return report;
}

DecayReport decay_fit(const std::function<double(double)>& magnitude,
                      std::span<const double> radii, const DecayFitOptions& options) {
  check_radii(radii);
  std::vector<double> values;
  values.reserve(radii.size());
  for (double r : radii) values.push_back(magnitude(r));
  return decay_fit(radii, values, options);
}

std::vector<double> linear_radii(double r_min, double r_max, std::size_t count) {
  require(count >= 2, "linear_radii needs at least two radii");
  require(r_min > 0.0 && r_max > r_min, "linear_radii needs 0 < r_min < r_max");
  std::vector<double> out(count);
  const double step = (r_max - r_min) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) out[i] = r_min + step * static_cast<double>(i);
  out.back() = r_max;
  return out;
}

}  // namespace configeo::fourier
