#include "configeo/energy.hpp"

#include <cmath>
#include <sstream>

#include "configeo/error.hpp"
#include "configeo/parallel.hpp"
#include "configeo/regression.hpp"

namespace configeo::energy {

double discrete_energy(const PointSet& points, double s) {
  require(s > 0.0 && std::isfinite(s), "energy exponent s must be positive");
  const std::size_t n = points.size();
  if (n == 1) return 0.0;

  std::vector<double> row_sums(n, 0.0);
  parallel_chunks(n, 64, [&](std::size_t begin, std::size_t end) {
    std::vector<double> terms;
    terms.reserve(n - 1);
    for (std::size_t i = begin; i < end; ++i) {
      terms.clear();
      const auto p = points.point(i);
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        const double dist = distance(p, points.point(j));
        if (dist < kCoincidenceFloor) {
          std::ostringstream msg;
          msg << "points " << std::min(i, j) << " and " << std::max(i, j)
              << " coincide (distance " << dist << ")";
          fail(ErrorCode::coincident_points, msg.str());
        }
        terms.push_back(std::pow(dist, -s));
      }
      row_sums[i] = pairwise_sum(terms);
    }
  });
  const double nn = static_cast<double>(n);
  return pairwise_sum(row_sums) / (nn * nn);
}

EnergyReport is_adaptable(const PointSet& points, double s, double constant) {
  require(constant > 0.0, "adaptability constant C must be positive");
  EnergyReport report;
  report.s = s;
  report.n = points.size();
  report.adaptable_at = constant;
  report.value = discrete_energy(points, s);
  report.verdict = report.value <= constant;
  return report;
}

std::vector<std::pair<double, double>> energy_profile(const PointSet& points,
                                                      std::span<const double> s_grid) {
  std::vector<std::pair<double, double>> out;
  out.reserve(s_grid.size());
  for (double s : s_grid) out.emplace_back(s, discrete_energy(points, s));
  return out;
}

}  // namespace configeo::energy
