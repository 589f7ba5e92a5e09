#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace configeo {

/// Default cap on generated point counts; keeps O(n^{k+1}) counting sane.
inline constexpr std::size_t kDefaultPointBudget = 1'000'000;

struct PointSetMeta {
  std::string generator = "unknown";
  std::uint64_t seed = 0;
  std::optional<double> nominal_dimension;
  std::optional<double> separation;

  bool operator==(const PointSetMeta&) const = default;
};

/// An n-point configuration in [0,1]^d, stored row-major.
class PointSet {
 public:
  PointSet(std::size_t dim, std::vector<double> coords, PointSetMeta meta = {});

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return coords_.size() / dim_; }

  std::span<const double> point(std::size_t i) const noexcept {
    return {coords_.data() + i * dim_, dim_};
  }
  std::span<const double> coords() const noexcept { return coords_; }
  const PointSetMeta& meta() const noexcept { return meta_; }

  /// Copy with every point mapped through f (meta kept, separation dropped).
  template <class F>
  PointSet transformed(F&& f) const {
    std::vector<double> out(coords_.size());
    for (std::size_t i = 0; i < size(); ++i) {
      f(point(i), std::span<double>(out.data() + i * dim_, dim_));
    }
    PointSetMeta meta = meta_;
    meta.separation.reset();
    return PointSet(dim_, std::move(out), meta, unchecked_tag{});
  }

  bool operator==(const PointSet&) const = default;

 private:
  struct unchecked_tag {};
  PointSet(std::size_t dim, std::vector<double> coords, PointSetMeta meta,
           unchecked_tag)
      : dim_(dim), coords_(std::move(coords)), meta_(std::move(meta)) {}

  std::size_t dim_;
  std::vector<double> coords_;
  PointSetMeta meta_;
};

/// Euclidean distance, evaluated in a fixed order so that |a-b| == |b-a|
/// bit for bit.
inline double distance(std::span<const double> a, std::span<const double> b) {
  double acc = 0.0;
  for (std::size_t c = 0; c < a.size(); ++c) {
    const double diff = a[c] - b[c];
    acc += diff * diff;
  }
  return std::sqrt(acc);
}

namespace pointgen {

enum class Kind { lattice, cantor_product, homogeneous, uniform_random, coplanar, from_file };

const char* to_string(Kind kind) noexcept;
Kind kind_from_string(const std::string& name);

struct GeneratorSpec {
  Kind kind = Kind::lattice;
  std::size_t dim = 2;
  std::size_t side = 2;       // lattice: points per axis m
  double ratio = 1.0 / 3.0;   // cantor: contraction ratio r
  std::size_t level = 0;      // cantor: level L
  std::size_t count = 1;      // random/coplanar/homogeneous: n
  std::uint64_t seed = 0;
  double offset = 0.5;        // coplanar: fixed value of the last coordinate
  std::string path;           // from_file
  std::size_t budget = kDefaultPointBudget;

  /// Throws Error(invalid_argument) on malformed parameters.
  void validate() const;
};

/// {0, 1/(m-1), ..., 1}^d; the single origin for m = 1.
PointSet lattice(std::size_t dim, std::size_t side,
                 std::size_t budget = kDefaultPointBudget);

/// Level-L left endpoints of the d-fold product of the ratio-r Cantor set.
PointSet cantor(std::size_t dim, double ratio, std::size_t level,
                std::size_t budget = kDefaultPointBudget);

PointSet uniform_random(std::size_t dim, std::size_t count, std::uint64_t seed,
                        std::size_t budget = kDefaultPointBudget);

/// Uniform points on the slice {x_d = offset}.
PointSet coplanar(std::size_t dim, std::size_t count, std::uint64_t seed,
                  double offset = 0.5, std::size_t budget = kDefaultPointBudget);

/// Randomly jittered lattice: one uniform point in each cell of an m^d grid
/// (m = round(n^{1/d})), giving a separated, well-spread set.
PointSet homogeneous(std::size_t dim, std::size_t count, std::uint64_t seed,
                     std::size_t budget = kDefaultPointBudget);

PointSet generate(const GeneratorSpec& spec);

}  // namespace pointgen

// Text format: "pointset v1 d=<d> n=<n>", optional "# key=value" lines,
// then n lines of d space-separated reals with 17 significant digits.
void write_pointset(std::ostream& os, const PointSet& points);
std::string format_pointset(const PointSet& points);
PointSet read_pointset(std::istream& is);
PointSet parse_pointset(const std::string& text);
PointSet load_pointset(const std::string& path);
void save_pointset(const std::string& path, const PointSet& points);

/// Shortest pairwise distance (O(n^2)); +inf for n < 2.
double min_separation(const PointSet& points);

}  // namespace configeo
