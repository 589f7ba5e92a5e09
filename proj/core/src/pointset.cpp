#include "configeo/pointset.hpp"

#include <cmath>
#include <limits>

#include "configeo/error.hpp"
#include "configeo/rng.hpp"

namespace configeo {

PointSet::PointSet(std::size_t dim, std::vector<double> coords, PointSetMeta meta)
    : dim_(dim), coords_(std::move(coords)), meta_(std::move(meta)) {
  require(dim_ >= 1, "point set dimension must be at least 1");
  require(!coords_.empty() && coords_.size() % dim_ == 0,
          "point set needs at least one point and a whole number of coordinates");
  for (double c : coords_) {
    require(std::isfinite(c) && c >= 0.0 && c <= 1.0,
            "point coordinates must lie in [0,1]");
  }
}

double min_separation(const PointSet& points) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      best = std::min(best, distance(points.point(i), points.point(j)));
    }
  }
  return best;
}

namespace pointgen {

namespace {

std::size_t checked_power(std::size_t base, std::size_t exponent, std::size_t budget) {
  std::size_t total = 1;
  for (std::size_t e = 0; e < exponent; ++e) {
    if (base != 0 && total > budget / base) {
      fail(ErrorCode::capacity, "generator would exceed the point budget of " +
                                    std::to_string(budget));
    }
    total *= base;
  }
  if (total > budget) {
    fail(ErrorCode::capacity,
         "generator would exceed the point budget of " + std::to_string(budget));
  }
  return total;
}

void check_budget(std::size_t n, std::size_t budget) {
  if (n > budget) {
    fail(ErrorCode::capacity,
         "generator would exceed the point budget of " + std::to_string(budget));
  }
}

}  // namespace

const char* to_string(Kind kind) noexcept {
  switch (kind) {
    case Kind::lattice: return "lattice";
    case Kind::cantor_product: return "cantor_product";
    case Kind::homogeneous: return "homogeneous";
    case Kind::uniform_random: return "uniform_random";
    case Kind::coplanar: return "coplanar";
    case Kind::from_file: return "from_file";
  }
  return "unknown";
}

Kind kind_from_string(const std::string& name) {
  if (name == "lattice") return Kind::lattice;
  if (name == "cantor" || name == "cantor_product") return Kind::cantor_product;
  if (name == "homogeneous") return Kind::homogeneous;
  if (name == "random" || name == "uniform_random") return Kind::uniform_random;
  if (name == "coplanar") return Kind::coplanar;
  if (name == "file" || name == "from_file") return Kind::from_file;
  fail(ErrorCode::invalid_argument, "unknown generator kind '" + name + "'");
}

void GeneratorSpec::validate() const {
  if (kind == Kind::from_file) {
    require(!path.empty(), "from_file generator needs a path");
    return;
  }
  require(dim >= 1, "generator dimension must be at least 1");
  switch (kind) {
    case Kind::lattice:
      require(side >= 1, "lattice side count m must be at least 1");
      break;
    case Kind::cantor_product:
      require(ratio > 0.0 && ratio < 0.5, "cantor ratio r must lie in (0, 1/2)");
      break;
    case Kind::coplanar:
      require(dim >= 2, "coplanar generator needs d >= 2");
      require(offset >= 0.0 && offset <= 1.0, "coplanar offset must lie in [0,1]");
      [[fallthrough]];
    case Kind::uniform_random:
    case Kind::homogeneous:
      require(count >= 1, "generator point count must be at least 1");
      break;
    case Kind::from_file:
      break;
  }
}

PointSet lattice(std::size_t dim, std::size_t side, std::size_t budget) {
  GeneratorSpec{.kind = Kind::lattice, .dim = dim, .side = side}.validate();
  const std::size_t n = checked_power(side, dim, budget);
  std::vector<double> coords(n * dim);
  const double step = side > 1 ? 1.0 / static_cast<double>(side - 1) : 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t rest = i;
    for (std::size_t c = dim; c-- > 0;) {
      const std::size_t digit = rest % side;
      rest /= side;
      coords[i * dim + c] =
          side > 1 ? static_cast<double>(digit) / static_cast<double>(side - 1) : 0.0;
    }
  }
  PointSetMeta meta{.generator = "lattice", .nominal_dimension = static_cast<double>(dim)};
  if (side >= 2) meta.separation = step;
  return PointSet(dim, std::move(coords), std::move(meta));
}

PointSet cantor(std::size_t dim, double ratio, std::size_t level, std::size_t budget) {
  GeneratorSpec{.kind = Kind::cantor_product, .dim = dim, .ratio = ratio, .level = level}
      .validate();
  const std::size_t per_axis = checked_power(2, level, budget);
  const std::size_t n = checked_power(per_axis, dim, budget);

  // Left endpoints on one axis: sum_j b_j (1 - r) r^{j-1}, digits b_j in {0,1}.
  std::vector<double> axis(per_axis, 0.0);
  for (std::size_t idx = 0; idx < per_axis; ++idx) {
    double x = 0.0;
    double scale = 1.0;
    for (std::size_t j = 0; j < level; ++j) {
      const std::size_t bit = (idx >> (level - 1 - j)) & 1u;
      if (bit) x += (1.0 - ratio) * scale;
      scale *= ratio;
    }
    axis[idx] = x;
  }

  std::vector<double> coords(n * dim);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t rest = i;
    for (std::size_t c = dim; c-- > 0;) {
      coords[i * dim + c] = axis[rest % per_axis];
      rest /= per_axis;
    }
  }
  PointSetMeta meta{.generator = "cantor_product",
                    .nominal_dimension = static_cast<double>(dim) * std::log(2.0) /
                                         std::log(1.0 / ratio)};
  if (level >= 1) meta.separation = (1.0 - ratio) * std::pow(ratio, double(level - 1));
  return PointSet(dim, std::move(coords), std::move(meta));
}

PointSet uniform_random(std::size_t dim, std::size_t count, std::uint64_t seed,
                        std::size_t budget) {
  GeneratorSpec{.kind = Kind::uniform_random, .dim = dim, .count = count}.validate();
  check_budget(count, budget);
  Rng rng(seed);
  std::vector<double> coords(count * dim);
  for (double& c : coords) c = rng.uniform();
  return PointSet(dim, std::move(coords),
                  {.generator = "uniform_random",
                   .seed = seed,
                   .nominal_dimension = static_cast<double>(dim)});
}

PointSet coplanar(std::size_t dim, std::size_t count, std::uint64_t seed, double offset,
                  std::size_t budget) {
  GeneratorSpec{.kind = Kind::coplanar, .dim = dim, .count = count, .offset = offset}
      .validate();
  check_budget(count, budget);
  Rng rng(seed);
  std::vector<double> coords(count * dim);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t c = 0; c + 1 < dim; ++c) coords[i * dim + c] = rng.uniform();
    coords[i * dim + dim - 1] = offset;
  }
  return PointSet(dim, std::move(coords),
                  {.generator = "coplanar",
                   .seed = seed,
                   .nominal_dimension = static_cast<double>(dim - 1)});
}

PointSet homogeneous(std::size_t dim, std::size_t count, std::uint64_t seed,
                     std::size_t budget) {
  GeneratorSpec{.kind = Kind::homogeneous, .dim = dim, .count = count}.validate();
  const auto side = static_cast<std::size_t>(
      std::max(1.0, std::round(std::pow(static_cast<double>(count), 1.0 / double(dim)))));
  const std::size_t n = checked_power(side, dim, budget);
  Rng rng(seed);
  std::vector<double> coords(n * dim);
  const double cell = 1.0 / static_cast<double>(side);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t rest = i;
    for (std::size_t c = dim; c-- > 0;) {
      const double digit = static_cast<double>(rest % side);
      rest /= side;
      // Central half of each cell, so neighbours stay at least cell/2 apart.
      coords[i * dim + c] = (digit + 0.25 + 0.5 * rng.uniform()) * cell;
    }
  }
  return PointSet(dim, std::move(coords),
                  {.generator = "homogeneous",
                   .seed = seed,
                   .nominal_dimension = static_cast<double>(dim)});
}

PointSet generate(const GeneratorSpec& spec) {
  spec.validate();
  switch (spec.kind) {
    case Kind::lattice: return lattice(spec.dim, spec.side, spec.budget);
    case Kind::cantor_product: return cantor(spec.dim, spec.ratio, spec.level, spec.budget);
    case Kind::uniform_random:
      return uniform_random(spec.dim, spec.count, spec.seed, spec.budget);
    case Kind::coplanar:
      return coplanar(spec.dim, spec.count, spec.seed, spec.offset, spec.budget);
    case Kind::homogeneous: return homogeneous(spec.dim, spec.count, spec.seed, spec.budget);
    case Kind::from_file: {
      PointSet points = load_pointset(spec.path);
      check_budget(points.size(), spec.budget);
      return points;
    }
  }
  fail(ErrorCode::invalid_argument, "unknown generator kind");
}

}  // namespace pointgen
}  // namespace configeo
