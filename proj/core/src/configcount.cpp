#include "configeo/configcount.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "configeo/error.hpp"
#include "configeo/parallel.hpp"

namespace configeo::count {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::size_t pair_count(std::size_t k) { return (k + 1) * k / 2; }

std::uint64_t factorial(std::size_t m) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= m; ++i) f *= i;
  return f;
}

void check_brute_budget(std::size_t n, std::size_t arity) {
  const double tuples = std::pow(static_cast<double>(n), static_cast<double>(arity));
  if (tuples > kBruteForceBudget) {
    fail(ErrorCode::capacity, "enumeration of " + std::to_string(n) + "^" +
                                  std::to_string(arity) +
                                  " tuples exceeds the brute-force budget");
  }
}

// Visits every ordered tuple of pairwise distinct indices of length `arity`
// drawn from [0, n) whose first entry lies in [first_begin, first_end).
template <class Leaf>
void for_each_ordered_tuple(std::size_t n, std::size_t arity, std::size_t first_begin,
                            std::size_t first_end, std::vector<std::size_t>& tuple,
                            Leaf&& leaf) {
  tuple.assign(arity, 0);
  std::vector<char> used(n, 0);
  auto recurse = [&](auto&& self, std::size_t pos) -> void {
    if (pos == arity) {
      leaf(std::span<const std::size_t>(tuple));
      return;
    }
    const std::size_t lo = pos == 0 ? first_begin : 0;
    const std::size_t hi = pos == 0 ? first_end : n;
    for (std::size_t j = lo; j < hi; ++j) {
      if (used[j]) continue;
      used[j] = 1;
      tuple[pos] = j;
      self(self, pos + 1);
      used[j] = 0;
    }
  };
  recurse(recurse, 0);
}

// Visits every strictly increasing index tuple of length `arity` whose first
// entry lies in [first_begin, first_end).
template <class Leaf>
void for_each_subset(std::size_t n, std::size_t arity, std::size_t first_begin,
                     std::size_t first_end, Leaf&& leaf) {
  std::vector<std::size_t> tuple(arity, 0);
  auto recurse = [&](auto&& self, std::size_t pos, std::size_t start) -> void {
    if (pos == arity) {
      leaf(std::span<const std::size_t>(tuple));
      return;
    }
    const std::size_t hi = pos == 0 ? first_end : n;
    for (std::size_t j = start; j < hi; ++j) {
      if (n - j < arity - pos) break;
      tuple[pos] = j;
      self(self, pos + 1, j + 1);
    }
  };
  recurse(recurse, 0, first_begin);
}

// Sums per-chunk integer counts; integer addition makes the total
// independent of scheduling.
template <class ChunkBody>
std::uint64_t parallel_count(std::size_t n, std::size_t chunk, ChunkBody&& body) {
  std::atomic<std::uint64_t> total{0};
  parallel_chunks(n, chunk, [&](std::size_t begin, std::size_t end) {
    total.fetch_add(body(begin, end), std::memory_order_relaxed);
  });
  return total.load();
}

struct Interval {
  double lo;
  double hi;
  bool contains(double v) const { return lo <= v && v <= hi; }
};

Interval closed_interval(double t, double delta) { return {t - delta, t + delta}; }

// Determinant of a small dense matrix by Gaussian elimination with partial
// pivoting; `m` is row-major dim x dim and is overwritten.
double small_determinant(std::span<double> m, std::size_t dim) {
  double det = 1.0;
  for (std::size_t col = 0; col < dim; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < dim; ++r) {
      if (std::abs(m[r * dim + col]) > std::abs(m[pivot * dim + col])) pivot = r;
    }
    if (m[pivot * dim + col] == 0.0) return 0.0;
    if (pivot != col) {
      for (std::size_t c = 0; c < dim; ++c) std::swap(m[pivot * dim + c], m[col * dim + c]);
      det = -det;
    }
    const double diag = m[col * dim + col];
    det *= diag;
    for (std::size_t r = col + 1; r < dim; ++r) {
      const double factor = m[r * dim + col] / diag;
      if (factor == 0.0) continue;
      for (std::size_t c = col; c < dim; ++c) m[r * dim + c] -= factor * m[col * dim + c];
    }
  }
  return det;
}

CountReport make_report(const PointSet& points, ConfigQuery query, std::uint64_t count,
                        Algorithm algorithm, Clock::time_point start) {
  CountReport report;
  report.query = std::move(query);
  report.n = points.size();
  report.dim = points.dim();
  report.count = count;
  report.algorithm = algorithm;
  report.elapsed_seconds = seconds_since(start);
  return report;
}

// Uniform grid over the bounding box with cells no smaller than `min_cell`,
// stored as CSR buckets. The cell size may be enlarged to keep the number of
// cells proportional to n.
class UniformGrid {
 public:
  UniformGrid(const PointSet& points, double min_cell) : dim_(points.dim()) {
    const std::size_t n = points.size();
    lower_.assign(dim_, std::numeric_limits<double>::infinity());
    std::vector<double> upper(dim_, -std::numeric_limits<double>::infinity());
    for (std::size_t i = 0; i < n; ++i) {
      const auto p = points.point(i);
      for (std::size_t c = 0; c < dim_; ++c) {
        lower_[c] = std::min(lower_[c], p[c]);
        upper[c] = std::max(upper[c], p[c]);
      }
    }
    double extent = 0.0;
    for (std::size_t c = 0; c < dim_; ++c) extent = std::max(extent, upper[c] - lower_[c]);

    const double cell_cap = std::max<double>(16.0, 4.0 * static_cast<double>(n));
    cell_ = std::max(min_cell, extent / std::pow(cell_cap, 1.0 / double(dim_)));
    if (!(cell_ > 0.0)) cell_ = 1.0;

    dims_.resize(dim_);
    std::size_t total = 1;
    for (std::size_t c = 0; c < dim_; ++c) {
      dims_[c] = static_cast<std::size_t>(std::floor((upper[c] - lower_[c]) / cell_)) + 1;
      total *= dims_[c];
    }

    cell_of_.resize(n);
    start_.assign(total + 1, 0);
    for (std::size_t i = 0; i < n; ++i) {
      cell_of_[i] = linear_cell(points.point(i));
      ++start_[cell_of_[i] + 1];
    }
    std::partial_sum(start_.begin(), start_.end(), start_.begin());
    members_.resize(n);
    std::vector<std::size_t> fill(start_.begin(), start_.end() - 1);
    for (std::size_t i = 0; i < n; ++i) members_[fill[cell_of_[i]]++] = i;
  }

  // Calls visit(j) for every point in the 3^d block of cells around point i.
  template <class Visit>
  void for_each_neighbor(std::size_t i, Visit&& visit) const {
    std::vector<std::size_t> coord(dim_);
    std::size_t rest = cell_of_[i];
    for (std::size_t c = dim_; c-- > 0;) {
      coord[c] = rest % dims_[c];
      rest /= dims_[c];
    }
    std::vector<int> offset(dim_, -1);
    for (;;) {
      bool inside = true;
      std::size_t linear = 0;
      for (std::size_t c = 0; c < dim_; ++c) {
        const long long v = static_cast<long long>(coord[c]) + offset[c];
        if (v < 0 || v >= static_cast<long long>(dims_[c])) {
          inside = false;
          break;
        }
        linear = linear * dims_[c] + static_cast<std::size_t>(v);
      }
      if (inside) {
        for (std::size_t m = start_[linear]; m < start_[linear + 1]; ++m) visit(members_[m]);
      }
      std::size_t c = 0;
      while (c < dim_ && offset[c] == 1) offset[c++] = -1;
      if (c == dim_) break;
      ++offset[c];
    }
  }

 private:
  std::size_t linear_cell(std::span<const double> p) const {
    std::size_t linear = 0;
    for (std::size_t c = 0; c < dim_; ++c) {
      auto idx = static_cast<std::size_t>(std::floor((p[c] - lower_[c]) / cell_));
      idx = std::min(idx, dims_[c] - 1);
      linear = linear * dims_[c] + idx;
    }
    return linear;
  }

  std::size_t dim_;
  double cell_ = 1.0;
  std::vector<double> lower_;
  std::vector<std::size_t> dims_;
  std::vector<std::size_t> cell_of_;
  std::vector<std::size_t> start_;
  std::vector<std::size_t> members_;
};

std::vector<Interval> simplex_intervals(std::size_t k, std::span<const double> t,
                                        double delta) {
  std::vector<Interval> bounds;
  bounds.reserve(t.size());
  for (std::size_t p = 0; p < pair_count(k); ++p) bounds.push_back(closed_interval(t[p], delta));
  return bounds;
}

std::uint64_t simplex_brute(const PointSet& points, std::size_t k,
                            const std::vector<Interval>& bounds) {
  const std::size_t n = points.size();
  const std::size_t arity = k + 1;
  check_brute_budget(n, arity);
  return parallel_count(n, 1, [&](std::size_t begin, std::size_t end) {
    std::uint64_t local = 0;
    std::vector<std::size_t> tuple;
    for_each_ordered_tuple(n, arity, begin, end, tuple, [&](std::span<const std::size_t> tup) {
      for (std::size_t a = 0; a < arity; ++a) {
        for (std::size_t b = a + 1; b < arity; ++b) {
          const double dist = distance(points.point(tup[a]), points.point(tup[b]));
          if (!bounds[pair_index(a, b, k)].contains(dist)) return;
        }
      }
      ++local;
    });
    return local;
  });
}

std::uint64_t simplex_pruned(const PointSet& points, std::size_t k,
                             const std::vector<Interval>& bounds, std::span<const double> t,
                             double delta) {
  const std::size_t n = points.size();
  const std::size_t arity = k + 1;
  const double reach = *std::max_element(t.begin(), t.end()) + delta;
  const UniformGrid grid(points, reach);

  return parallel_count(n, 16, [&](std::size_t begin, std::size_t end) {
    std::uint64_t local = 0;
    // candidates[v]: points whose distance to the first vertex fits pair (0, v).
    std::vector<std::vector<std::size_t>> candidates(arity);
    std::vector<std::size_t> chosen(arity);
    for (std::size_t i = begin; i < end; ++i) {
      for (auto& c : candidates) c.clear();
      const auto xi = points.point(i);
      grid.for_each_neighbor(i, [&](std::size_t j) {
        if (j == i) return;
        const double dist = distance(xi, points.point(j));
        for (std::size_t v = 1; v < arity; ++v) {
          if (bounds[pair_index(0, v, k)].contains(dist)) candidates[v].push_back(j);
        }
      });
      chosen[0] = i;
      auto extend = [&](auto&& self, std::size_t v) -> void {
        if (v == arity) {
          ++local;
          return;
        }
        for (std::size_t j : candidates[v]) {
          bool ok = true;
          for (std::size_t q = 1; q < v && ok; ++q) {
            if (chosen[q] == j) {
              ok = false;
              break;
            }
            const double dist = distance(points.point(chosen[q]), points.point(j));
            ok = bounds[pair_index(q, v, k)].contains(dist);
          }
          if (!ok) continue;
          chosen[v] = j;
          self(self, v + 1);
        }
      };
      extend(extend, 1);
    }
    return local;
  });
}

template <class Measure>
std::uint64_t symmetric_count(const PointSet& points, std::size_t arity, Interval bounds,
                              Algorithm algorithm, Measure&& measure) {
  const std::size_t n = points.size();
  if (n < arity) return 0;
  if (algorithm == Algorithm::brute) {
    check_brute_budget(n, arity);
    return parallel_count(n, 1, [&](std::size_t begin, std::size_t end) {
      std::uint64_t local = 0;
      std::vector<std::size_t> tuple;
      for_each_ordered_tuple(n, arity, begin, end, tuple,
                             [&](std::span<const std::size_t> tup) {
                               if (bounds.contains(measure(tup))) ++local;
                             });
      return local;
    });
  }
  // The measure is symmetric, so each subset stands for arity! orderings.
  const std::uint64_t orderings = factorial(arity);
  return parallel_count(n, 1, [&](std::size_t begin, std::size_t end) {
    std::uint64_t local = 0;
    for_each_subset(n, arity, begin, end, [&](std::span<const std::size_t> tup) {
      if (bounds.contains(measure(tup))) local += orderings;
    });
    return local;
  });
}

}  // namespace

const char* to_string(Family family) noexcept {
  switch (family) {
    case Family::simplex: return "simplex";
    case Family::volume: return "volume";
    case Family::area2: return "area2";
    case Family::angle: return "angle";
    case Family::custom: return "custom";
  }
  return "unknown";
}

const char* to_string(VolumeConvention convention) noexcept {
  return convention == VolumeConvention::simplex ? "simplex" : "bare_determinant";
}

const char* to_string(Algorithm algorithm) noexcept {
  return algorithm == Algorithm::brute ? "brute" : "pruned";
}

Family family_from_string(const std::string& name) {
  if (name == "simplex") return Family::simplex;
  if (name == "volume") return Family::volume;
  if (name == "area2" || name == "area") return Family::area2;
  if (name == "angle") return Family::angle;
  if (name == "custom") return Family::custom;
  fail(ErrorCode::invalid_argument, "unknown configuration family '" + name + "'");
}

VolumeConvention convention_from_string(const std::string& name) {
  if (name == "bare_determinant" || name == "bare") return VolumeConvention::bare_determinant;
  if (name == "simplex") return VolumeConvention::simplex;
  fail(ErrorCode::invalid_argument, "unknown volume convention '" + name + "'");
}

Algorithm algorithm_from_string(const std::string& name) {
  if (name == "brute") return Algorithm::brute;
  if (name == "pruned") return Algorithm::pruned;
  fail(ErrorCode::invalid_argument, "unknown algorithm '" + name + "' (brute|pruned)");
}

void ConfigQuery::validate(std::size_t dim) const {
  require(std::isfinite(delta), "delta must be finite");
  for (double v : t) require(std::isfinite(v), "target values must be finite");
  switch (family) {
    case Family::simplex:
      require(delta > 0.0, "simplex queries need delta > 0");
      require(k >= 1 && k <= dim, "simplex queries need 1 <= k <= d");
      require(t.size() == pair_count(k),
              "simplex target needs C(k+1,2) = " + std::to_string(pair_count(k)) +
                  " entries, got " + std::to_string(t.size()));
      for (double v : t) require(v > 0.0, "simplex targets must be positive");
      break;
    case Family::volume:
      require(delta >= 0.0, "volume queries need delta >= 0");
      require(dim >= 2, "volume queries need d >= 2");
      require(k == dim, "volume queries need k = d");
      require(t.size() == 1, "volume target is a single value");
      require(t[0] >= 0.0, "volume target must be nonnegative");
      break;
    case Family::area2:
      require(delta >= 0.0, "area queries need delta >= 0");
      require(dim >= 2, "area queries need d >= 2");
      require(k == 2, "area queries need k = 2");
      require(t.size() == 1, "area target is a single value");
      require(t[0] >= 0.0, "area target must be nonnegative");
      break;
    case Family::angle:
      require(delta > 0.0, "angle queries need delta > 0");
      require(k == 2, "angle queries need k = 2");
      require(t.size() == 1, "angle target is a single value");
      require(t[0] >= 0.0 && t[0] <= std::numbers::pi, "angle target must lie in [0, pi]");
      break;
    case Family::custom:
      require(delta > 0.0, "custom queries need delta > 0");
      require(k >= 1, "custom queries need k >= 1");
      require(!t.empty(), "custom queries need a target vector");
      break;
  }
}

std::uint64_t ordered_tuple_count(std::size_t n, std::size_t k) {
  if (n <= k) return 0;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i <= k; ++i) total *= (n - i);
  return total;
}

std::size_t pair_index(std::size_t i, std::size_t j, std::size_t k) {
  const std::size_t points = k + 1;
  return i * points - i * (i + 1) / 2 + (j - i - 1);
}

double simplex_measure(const PointSet& points, std::span<const std::size_t> indices,
                       VolumeConvention convention) {
  const std::size_t dim = points.dim();
  require(indices.size() == dim + 1, "simplex_measure needs d+1 points");
  std::array<std::size_t, 16> sorted{};
  require(indices.size() <= sorted.size(), "simplex_measure supports d <= 15");
  std::copy(indices.begin(), indices.end(), sorted.begin());
  std::sort(sorted.begin(), sorted.begin() + indices.size());

  std::vector<double> m(dim * dim);
  const auto last = points.point(sorted[dim]);
  for (std::size_t r = 0; r < dim; ++r) {
    const auto p = points.point(sorted[r]);
    for (std::size_t c = 0; c < dim; ++c) m[r * dim + c] = p[c] - last[c];
  }
  const double det = std::abs(small_determinant(m, dim));
  return convention == VolumeConvention::simplex ? det / static_cast<double>(factorial(dim))
                                                 : det;
}

double triangle_measure(const PointSet& points, std::span<const std::size_t> indices,
                        VolumeConvention convention) {
  require(indices.size() == 3, "triangle_measure needs three points");
  std::array<std::size_t, 3> s{indices[0], indices[1], indices[2]};
  std::sort(s.begin(), s.end());
  const auto o = points.point(s[0]);
  const auto a = points.point(s[1]);
  const auto b = points.point(s[2]);
  double aa = 0.0, bb = 0.0, ab = 0.0;
  for (std::size_t c = 0; c < points.dim(); ++c) {
    const double u = a[c] - o[c];
    const double v = b[c] - o[c];
    aa += u * u;
    bb += v * v;
    ab += u * v;
  }
  const double gram = std::max(0.0, aa * bb - ab * ab);
  const double parallelogram = std::sqrt(gram);
  return convention == VolumeConvention::simplex ? 0.5 * parallelogram : parallelogram;
}

std::optional<double> angle_at(std::span<const double> apex, std::span<const double> a,
                               std::span<const double> b) {
  double uu = 0.0, vv = 0.0, uv = 0.0;
  for (std::size_t c = 0; c < apex.size(); ++c) {
    const double u = a[c] - apex[c];
    const double v = b[c] - apex[c];
    uu += u * u;
    vv += v * v;
    uv += u * v;
  }
  const double nu = std::sqrt(uu);
  const double nv = std::sqrt(vv);
  if (nu < kDegenerateLeg || nv < kDegenerateLeg) return std::nullopt;
  const double cosine = std::clamp(uv / (nu * nv), -1.0, 1.0);
  return std::acos(cosine);
}

CountReport count_simplex(const PointSet& points, std::size_t k, std::span<const double> t,
                          double delta, Algorithm algorithm) {
  const auto start = Clock::now();
  ConfigQuery query{.family = Family::simplex,
                    .k = k,
                    .t = std::vector<double>(t.begin(), t.end()),
                    .delta = delta};
  query.validate(points.dim());
  const auto bounds = simplex_intervals(k, t, delta);
  std::uint64_t total = 0;
  if (points.size() > k) {
    total = algorithm == Algorithm::brute ? simplex_brute(points, k, bounds)
                                          : simplex_pruned(points, k, bounds, t, delta);
  }
  return make_report(points, std::move(query), total, algorithm, start);
}

CountReport count_volume(const PointSet& points, double t, double delta,
                         VolumeConvention convention, Algorithm algorithm) {
  const auto start = Clock::now();
  ConfigQuery query{.family = Family::volume,
                    .k = points.dim(),
                    .t = {t},
                    .delta = delta,
                    .convention = convention};
  query.validate(points.dim());
  const std::uint64_t total =
      symmetric_count(points, points.dim() + 1, closed_interval(t, delta), algorithm,
                      [&](std::span<const std::size_t> tup) {
                        return simplex_measure(points, tup, convention);
                      });
  return make_report(points, std::move(query), total, algorithm, start);
}

CountReport count_area(const PointSet& points, double t, double delta,
                       VolumeConvention convention, Algorithm algorithm) {
  const auto start = Clock::now();
  ConfigQuery query{
      .family = Family::area2, .k = 2, .t = {t}, .delta = delta, .convention = convention};
  query.validate(points.dim());
  const std::uint64_t total = symmetric_count(
      points, 3, closed_interval(t, delta), algorithm,
      [&](std::span<const std::size_t> tup) { return triangle_measure(points, tup, convention); });
  return make_report(points, std::move(query), total, algorithm, start);
}

CountReport count_angle(const PointSet& points, double theta0, double delta,
                        Algorithm algorithm) {
  const auto start = Clock::now();
  ConfigQuery query{.family = Family::angle, .k = 2, .t = {theta0}, .delta = delta};
  query.validate(points.dim());
  const Interval bounds = closed_interval(theta0, delta);
  const std::size_t n = points.size();
  std::uint64_t total = 0;

  if (n >= 3 && algorithm == Algorithm::brute) {
    check_brute_budget(n, 3);
    total = parallel_count(n, 1, [&](std::size_t begin, std::size_t end) {
      std::uint64_t local = 0;
      std::vector<std::size_t> tuple;
      for_each_ordered_tuple(n, 3, begin, end, tuple, [&](std::span<const std::size_t> tup) {
        const auto theta =
            angle_at(points.point(tup[0]), points.point(tup[1]), points.point(tup[2]));
        if (theta && bounds.contains(*theta)) ++local;
      });
      return local;
    });
  } else if (n >= 3) {
    // The angle is symmetric in the two legs: count unordered leg pairs twice.
    total = parallel_count(n, 1, [&](std::size_t begin, std::size_t end) {
      std::uint64_t local = 0;
      for (std::size_t apex = begin; apex < end; ++apex) {
        const auto x = points.point(apex);
        for (std::size_t a = 0; a < n; ++a) {
          if (a == apex) continue;
          for (std::size_t b = a + 1; b < n; ++b) {
            if (b == apex) continue;
            const auto theta = angle_at(x, points.point(a), points.point(b));
            if (theta && bounds.contains(*theta)) local += 2;
          }
        }
      }
      return local;
    });
  }
  return make_report(points, std::move(query), total, algorithm, start);
}

CountReport count_phi(const PointSet& points, const PhiFunction& phi,
                      std::span<const double> t, double delta) {
  const auto start = Clock::now();
  require(phi.arity >= 1 && phi.output_dim >= 1, "phi needs arity and output_dim >= 1");
  require(static_cast<bool>(phi.evaluate), "phi has no evaluator");
  require(t.size() == phi.output_dim, "target length " + std::to_string(t.size()) +
                                          " does not match phi output dimension " +
                                          std::to_string(phi.output_dim));
  require(delta > 0.0, "delta must be positive");
  ConfigQuery query{.family = Family::custom,
                    .k = phi.arity - 1,
                    .t = std::vector<double>(t.begin(), t.end()),
                    .delta = delta};
  const std::size_t n = points.size();
  std::uint64_t total = 0;
  if (n >= phi.arity) {
    check_brute_budget(n, phi.arity);
    total = parallel_count(n, 1, [&](std::size_t begin, std::size_t end) {
      std::uint64_t local = 0;
      std::vector<std::size_t> tuple;
      std::vector<std::span<const double>> args(phi.arity);
      std::vector<double> out(phi.output_dim);
      for_each_ordered_tuple(n, phi.arity, begin, end, tuple,
                             [&](std::span<const std::size_t> tup) {
                               for (std::size_t a = 0; a < tup.size(); ++a) {
                                 args[a] = points.point(tup[a]);
                               }
                               phi.evaluate(args, out);
                               for (std::size_t m = 0; m < out.size(); ++m) {
                                 if (!(std::abs(out[m] - t[m]) < delta)) return;
                               }
                               ++local;
                             });
      return local;
    });
  }
  return make_report(points, std::move(query), total, Algorithm::brute, start);
}

CountReport run_query(const PointSet& points, const ConfigQuery& query, Algorithm algorithm,
                      const PhiFunction* phi) {
  switch (query.family) {
    case Family::simplex: return count_simplex(points, query.k, query.t, query.delta, algorithm);
    case Family::volume:
      require(query.t.size() == 1, "volume target is a single value");
      return count_volume(points, query.t[0], query.delta, query.convention, algorithm);
    case Family::area2:
      require(query.t.size() == 1, "area target is a single value");
      return count_area(points, query.t[0], query.delta, query.convention, algorithm);
    case Family::angle:
      require(query.t.size() == 1, "angle target is a single value");
      return count_angle(points, query.t[0], query.delta, algorithm);
    case Family::custom:
      require(phi != nullptr, "custom queries need a phi function");
      return count_phi(points, *phi, query.t, query.delta);
  }
  fail(ErrorCode::invalid_argument, "unknown family");
}

namespace phi {

PhiFunction pairwise_distances(std::size_t k) {
  PhiFunction f;
  f.arity = k + 1;
  f.output_dim = pair_count(k);
  f.name = "pairwise_distances";
  f.evaluate = [k](std::span<const std::span<const double>> pts, std::span<double> out) {
    for (std::size_t a = 0; a <= k; ++a) {
      for (std::size_t b = a + 1; b <= k; ++b) out[pair_index(a, b, k)] = distance(pts[a], pts[b]);
    }
  };
  return f;
}

PhiFunction constant(std::size_t arity, std::vector<double> value) {
  PhiFunction f;
  f.arity = arity;
  f.output_dim = value.size();
  f.name = "constant";
  f.evaluate = [value = std::move(value)](std::span<const std::span<const double>>,
                                          std::span<double> out) {
    std::copy(value.begin(), value.end(), out.begin());
  };
  return f;
}

PhiFunction difference(std::size_t dim) {
  PhiFunction f;
  f.arity = 2;
  f.output_dim = dim;
  f.name = "difference";
  f.evaluate = [](std::span<const std::span<const double>> pts, std::span<double> out) {
    for (std::size_t c = 0; c < out.size(); ++c) out[c] = pts[0][c] - pts[1][c];
  };
  return f;
}

}  // namespace phi

}  // namespace configeo::count
