#pragma once

#include <span>
#include <utility>
#include <vector>

#include "configeo/pointset.hpp"

namespace configeo::energy {

/// Pairs closer than this are treated as coincident points.
inline constexpr double kCoincidenceFloor = 1e-12;
/// Documented default for the adaptability constant C.
inline constexpr double kDefaultAdaptabilityConstant = 10.0;

struct EnergyReport {
  double s = 0.0;
  double value = 0.0;
  std::size_t n = 0;
  double adaptable_at = kDefaultAdaptabilityConstant;
  bool verdict = false;  // value <= adaptable_at
};

/// n^{-2} * sum over ordered pairs p != p' of |p - p'|^{-s}.
///
/// Each row sum and the final sum over rows use pairwise summation in index
/// order, so the value does not depend on the thread count.
/// Throws Error(coincident_points) if two points are closer than
/// kCoincidenceFloor, Error(invalid_argument) if s <= 0.
double discrete_energy(const PointSet& points, double s);

/// Verdict of the finite s-adaptability test discrete_energy(P, s) <= C.
EnergyReport is_adaptable(const PointSet& points, double s,
                          double constant = kDefaultAdaptabilityConstant);

std::vector<std::pair<double, double>> energy_profile(
    const PointSet& points, std::span<const double> s_grid);

}  // namespace configeo::energy
