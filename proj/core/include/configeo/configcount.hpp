#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "configeo/pointset.hpp"

namespace configeo::count {

enum class Family { simplex, volume, area2, angle, custom };
enum class VolumeConvention { bare_determinant, simplex };
enum class Algorithm { brute, pruned };

const char* to_string(Family family) noexcept;
const char* to_string(VolumeConvention convention) noexcept;
const char* to_string(Algorithm algorithm) noexcept;
Family family_from_string(const std::string& name);
VolumeConvention convention_from_string(const std::string& name);
Algorithm algorithm_from_string(const std::string& name);

/// Brute-force enumerations refuse to start beyond this many tuples.
inline constexpr double kBruteForceBudget = 1e9;
/// Apex legs shorter than this make the angle undefined; such triples are skipped.
inline constexpr double kDegenerateLeg = 1e-12;

/// A configuration family with target and tolerance. Tuples are always
/// ordered with pairwise distinct entries.
struct ConfigQuery {
  Family family = Family::simplex;
  std::size_t k = 1;        // configuration has k+1 points
  std::vector<double> t;    // C(k+1,2) pairwise targets (simplex) or one value
  double delta = 0.01;
  VolumeConvention convention = VolumeConvention::bare_determinant;

  /// Throws Error(invalid_argument) if the query is inconsistent with
  /// ambient dimension `dim`.
  void validate(std::size_t dim) const;
};

struct CountReport {
  ConfigQuery query;
  std::size_t n = 0;
  std::size_t dim = 0;
  std::uint64_t count = 0;
  Algorithm algorithm = Algorithm::pruned;
  double elapsed_seconds = 0.0;
};

/// A configuration map from (k+1) points in R^d to R^m.
struct PhiFunction {
  using Evaluator = std::function<void(std::span<const std::span<const double>> points,
                                       std::span<double> out)>;
  std::size_t arity = 2;
  std::size_t output_dim = 1;
  Evaluator evaluate;
  std::string name = "custom";
};

namespace phi {
/// The C(k+1,2) pairwise distances in (1,2),(1,3),...,(k,k+1) order.
PhiFunction pairwise_distances(std::size_t k);
/// Constant map onto `value`.
PhiFunction constant(std::size_t arity, std::vector<double> value);
/// Componentwise x - y for two points of dimension `dim`.
PhiFunction difference(std::size_t dim);
}  // namespace phi

/// Number of ordered distinct (k+1)-tuples: n (n-1) ... (n-k).
std::uint64_t ordered_tuple_count(std::size_t n, std::size_t k);

/// Index of pair (i, j), i < j, in the (1,2),(1,3),...,(k,k+1) order.
std::size_t pair_index(std::size_t i, std::size_t j, std::size_t k);

// Geometric measures. All are symmetric in their arguments; simplex_measure
// evaluates the determinant on the index-sorted tuple so that every ordering
// of the same points yields the same double.

/// |det(x^1 - x^{d+1}, ..., x^d - x^{d+1})|, divided by d! under the simplex
/// convention. `indices` holds d+1 point indices.
double simplex_measure(const PointSet& points, std::span<const std::size_t> indices,
                       VolumeConvention convention);

/// Area of the triangle (simplex convention) or the spanned parallelogram
/// (bare_determinant) for three points in any dimension.
double triangle_measure(const PointSet& points, std::span<const std::size_t> indices,
                        VolumeConvention convention);

/// Angle at apex x1 between x2 - x1 and x3 - x1; nullopt when a leg is
/// shorter than kDegenerateLeg.
std::optional<double> angle_at(std::span<const double> apex, std::span<const double> a,
                               std::span<const double> b);

// Counting. Closed intervals [t - delta, t + delta] for every family except
// count_phi, which uses the strict max-norm ball.

CountReport count_simplex(const PointSet& points, std::size_t k,
                          std::span<const double> t, double delta,
                          Algorithm algorithm = Algorithm::pruned);
CountReport count_volume(const PointSet& points, double t, double delta,
                         VolumeConvention convention = VolumeConvention::bare_determinant,
                         Algorithm algorithm = Algorithm::pruned);
CountReport count_area(const PointSet& points, double t, double delta,
                       VolumeConvention convention = VolumeConvention::simplex,
                       Algorithm algorithm = Algorithm::pruned);
CountReport count_angle(const PointSet& points, double theta0, double delta,
                        Algorithm algorithm = Algorithm::pruned);
CountReport count_phi(const PointSet& points, const PhiFunction& phi,
                      std::span<const double> t, double delta);

inline CountReport count_simplex_brute(const PointSet& points, std::size_t k,
                                       std::span<const double> t, double delta) {
  return count_simplex(points, k, t, delta, Algorithm::brute);
}
inline CountReport count_volume_brute(const PointSet& points, double t, double delta,
                                      VolumeConvention convention) {
  return count_volume(points, t, delta, convention, Algorithm::brute);
}
inline CountReport count_angle_brute(const PointSet& points, double theta0, double delta) {
  return count_angle(points, theta0, delta, Algorithm::brute);
}

/// Dispatches on query.family; `phi` is required for Family::custom.
CountReport run_query(const PointSet& points, const ConfigQuery& query,
                      Algorithm algorithm, const PhiFunction* phi = nullptr);

/// Number of delta-distinct congruence classes of (k+1)-point subsets.
///
/// Each subset is canonicalized to the lexicographically smallest distance
/// vector over all (k+1)! relabelings, then quantized to delta * Z.
/// Reflections are identified with rotations. Requires k <= 4.
std::size_t distinct_classes(const PointSet& points, std::size_t k, double delta);

struct BoxDimReport {
  std::vector<double> scales;
  std::vector<std::uint64_t> box_counts;
  double slope = 0.0;
  double stderr_slope = 0.0;
  bool degenerate = false;  // all N(delta) equal
};

/// Box-counting estimate over the unit cube: N(delta) is the number of
/// occupied cells of the grid of side delta (the last cell on each axis is
/// closed), and the slope of log N against log(1/delta) is fitted by OLS.
BoxDimReport box_dim(const PointSet& points, std::span<const double> scales);

/// Points (x^1, ..., x^{k+1}) in R^{d(k+1)} with x^j in sets[j] and
/// |phi(x) - t|_inf < delta: a finite sample of the solution set.
PointSet sample_solution_set(std::span<const PointSet> sets, const PhiFunction& phi,
                             std::span<const double> t, double delta);

}  // namespace configeo::count
