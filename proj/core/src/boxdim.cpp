#include <algorithm>
#include <cmath>

#include "configeo/configcount.hpp"
#include "configeo/error.hpp"
#include "configeo/regression.hpp"

namespace configeo::count {

BoxDimReport box_dim(const PointSet& points, std::span<const double> scales) {
  require(scales.size() >= 3, "box_dim needs at least three scales");
  for (double s : scales) require(s > 0.0 && s < 1.0, "box_dim scales must lie in (0,1)");

  BoxDimReport report;
  report.scales.assign(scales.begin(), scales.end());
  const std::size_t dim = points.dim();
  std::vector<std::vector<long long>> cells(points.size(), std::vector<long long>(dim));
  std::vector<double> log_inverse, log_count;

  for (double scale : scales) {
    // Cells [j s, (j+1) s); the last one on each axis also takes x = 1.
    const auto per_axis = static_cast<long long>(std::ceil(1.0 / scale - 1e-9));
    for (std::size_t i = 0; i < points.size(); ++i) {
      const auto p = points.point(i);
      for (std::size_t c = 0; c < dim; ++c) {
        cells[i][c] = std::min(static_cast<long long>(std::floor(p[c] / scale)), per_axis - 1);
      }
    }
    auto sorted = cells;
    std::sort(sorted.begin(), sorted.end());
    const auto occupied =
        static_cast<std::uint64_t>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
    report.box_counts.push_back(occupied);
    log_inverse.push_back(std::log(1.0 / scale));
    log_count.push_back(std::log(static_cast<double>(occupied)));
  }

  const bool all_equal = std::all_of(report.box_counts.begin(), report.box_counts.end(),
                                     [&](auto c) { return c == report.box_counts.front(); });
  const LineFit fit = ols(log_inverse, log_count);
  report.degenerate = all_equal || fit.degenerate;
  report.slope = all_equal ? 0.0 : fit.slope;
  report.stderr_slope = all_equal ? 0.0 : fit.stderr_slope;
  return report;
}

PointSet sample_solution_set(std::span<const PointSet> sets, const PhiFunction& phi,
                             std::span<const double> t, double delta) {
  require(!sets.empty(), "solution set sampling needs at least one factor set");
  require(sets.size() == phi.arity, "number of factor sets must equal phi arity");
  require(t.size() == phi.output_dim, "target length must equal phi output dimension");
  require(delta > 0.0, "delta must be positive");
  const std::size_t dim = sets.front().dim();
  double total = 1.0;
  for (const auto& s : sets) {
    require(s.dim() == dim, "factor sets must share one dimension");
    total *= static_cast<double>(s.size());
  }
  if (total > kBruteForceBudget) {
    fail(ErrorCode::capacity, "solution set enumeration exceeds the brute-force budget");
  }

  std::vector<double> coords;
  std::vector<std::size_t> idx(sets.size(), 0);
  std::vector<std::span<const double>> args(sets.size());
  std::vector<double> out(phi.output_dim);
  for (;;) {
    for (std::size_t a = 0; a < sets.size(); ++a) args[a] = sets[a].point(idx[a]);
    phi.evaluate(args, out);
    bool hit = true;
    for (std::size_t m = 0; m < out.size() && hit; ++m) hit = std::abs(out[m] - t[m]) < delta;
    if (hit) {
      for (const auto& a : args) coords.insert(coords.end(), a.begin(), a.end());
    }
    std::size_t pos = sets.size();
    while (pos-- > 0) {
      if (++idx[pos] < sets[pos].size()) break;
      idx[pos] = 0;
    }
    if (pos == static_cast<std::size_t>(-1)) break;
  }
  if (coords.empty()) fail(ErrorCode::infeasible, "solution set sample is empty");
  PointSetMeta meta{.generator = "solution_set:" + phi.name};
  return PointSet(dim * sets.size(), std::move(coords), std::move(meta));
}

}  // namespace configeo::count
