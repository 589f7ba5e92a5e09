#include "configeo/expfit.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "configeo/error.hpp"
#include "configeo/regression.hpp"
#include "configeo/rng.hpp"

namespace configeo::expfit {

namespace {

using count::Family;

long long binom2(long long m) { return m * (m - 1) / 2; }

void check_compatible(Family family, std::size_t k, std::size_t d) {
  require(d >= 2, "threshold registry needs d >= 2");
  switch (family) {
    case Family::simplex:
      require(k >= 1 && k <= d, "simplex thresholds need 1 <= k <= d");
      break;
    case Family::volume:
      require(k == d, "volume thresholds need k = d");
      break;
    case Family::area2:
    case Family::angle:
      require(k == 2, "area2/angle thresholds need k = 2");
      break;
    case Family::custom:
      fail(ErrorCode::invalid_argument, "custom configurations have no registered threshold");
  }
}

}  // namespace

Rational threshold_exact(Family family, std::size_t k, std::size_t d) {
  check_compatible(family, k, d);
  const auto dd = static_cast<long long>(d);
  const auto kk = static_cast<long long>(k);
  switch (family) {
    case Family::simplex: return Rational(dd) - Rational(dd - 1, 2 * kk);
    case Family::volume:
      return d % 2 == 0 ? Rational(dd - 1) + Rational(1, 2 * dd)
                        : Rational(dd - 1) + Rational(1, 2 * (dd - 1));
    case Family::area2: return Rational(dd, 2) + Rational(1, 4);
    case Family::angle: return Rational(dd + 1, 2);
    case Family::custom: break;
  }
  fail(ErrorCode::invalid_argument, "unknown family");
}

double threshold(Family family, std::size_t k, std::size_t d) {
  return boost::rational_cast<double>(threshold_exact(family, k, d));
}

Rational count_exponent_exact(Family family, std::size_t k, std::size_t d, Rational s) {
  require(s > 0, "count exponent needs s > 0");
  const auto kk = static_cast<long long>(k);
  const auto dd = static_cast<long long>(d);
  switch (family) {
    case Family::simplex: return Rational(kk + 1) - Rational(binom2(kk + 1)) / s;
    case Family::volume: return Rational(dd + 1) - Rational(1) / s;
    case Family::area2:
    case Family::angle: return Rational(3) - Rational(1) / s;
    case Family::custom: break;
  }
  fail(ErrorCode::invalid_argument, "custom configurations have no registered exponent");
}

double count_exponent(Family family, std::size_t k, std::size_t d, double s) {
  require(s > 0.0, "count exponent needs s > 0");
  const double kk = static_cast<double>(k);
  const double dd = static_cast<double>(d);
  switch (family) {
    case Family::simplex: return kk + 1.0 - (kk + 1.0) * kk / 2.0 / s;
    case Family::volume: return dd + 1.0 - 1.0 / s;
    case Family::area2:
    case Family::angle: return 3.0 - 1.0 / s;
    case Family::custom: break;
  }
  fail(ErrorCode::invalid_argument, "custom configurations have no registered exponent");
}

SlopeFit fit_slope(std::span<const std::pair<double, double>> samples) {
  std::vector<double> x, y;
  for (const auto& [n, value] : samples) {
    if (value > 0.0) {
      require(n > 0.0, "fit_slope needs positive n");
      x.push_back(std::log(n));
      y.push_back(std::log(value));
    }
  }
  if (x.size() < 3) {
    fail(ErrorCode::infeasible, "fit_slope needs at least three samples with y > 0, got " +
                                    std::to_string(x.size()));
  }
  const LineFit fit = ols(x, y);
  return {fit.slope, fit.stderr_slope, x.size()};
}

const char* to_string(Verdict verdict) noexcept {
  switch (verdict) {
    case Verdict::consistent: return "consistent";
    case Verdict::exceeds: return "exceeds";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "unknown";
}

pointgen::GeneratorSpec spec_for_size(const pointgen::GeneratorSpec& base, std::size_t n) {
  require(n >= 1, "scan sizes must be positive");
  pointgen::GeneratorSpec spec = base;
  const double dim = static_cast<double>(base.dim);
  switch (base.kind) {
    case pointgen::Kind::lattice:
      spec.side = static_cast<std::size_t>(
          std::max(1.0, std::round(std::pow(static_cast<double>(n), 1.0 / dim))));
      break;
    case pointgen::Kind::cantor_product:
      spec.level = static_cast<std::size_t>(
          std::max(0.0, std::round(std::log2(static_cast<double>(n)) / dim)));
      break;
    case pointgen::Kind::uniform_random:
    case pointgen::Kind::coplanar:
    case pointgen::Kind::homogeneous:
      spec.count = n;
      break;
    case pointgen::Kind::from_file:
      fail(ErrorCode::invalid_argument, "scans need a parametric generator, not from_file");
  }
  return spec;
}

namespace {

// Draws one configuration realized by `points` and returns its target vector.
std::vector<double> realized_target(const PointSet& points, const count::ConfigQuery& query,
                                    const count::PhiFunction* phi, std::uint64_t seed) {
  const std::size_t arity = query.family == Family::custom && phi ? phi->arity : query.k + 1;
  require(points.size() >= arity, "largest scan set is smaller than the configuration");
  Rng rng = Rng::stream(seed, 0x7a96e7);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<std::size_t> tuple;
    while (tuple.size() < arity) {
      const auto j = static_cast<std::size_t>(rng.below(points.size()));
      if (std::find(tuple.begin(), tuple.end(), j) == tuple.end()) tuple.push_back(j);
    }
    switch (query.family) {
      case Family::simplex: {
        std::vector<double> t(arity * (arity - 1) / 2);
        for (std::size_t a = 0; a < arity; ++a) {
          for (std::size_t b = a + 1; b < arity; ++b) {
            t[count::pair_index(a, b, query.k)] =
                distance(points.point(tuple[a]), points.point(tuple[b]));
          }
        }
        return t;
      }
      case Family::volume:
        return {count::simplex_measure(points, tuple, query.convention)};
      case Family::area2:
        return {count::triangle_measure(points, tuple, query.convention)};
      case Family::angle: {
        const auto theta = count::angle_at(points.point(tuple[0]), points.point(tuple[1]),
                                           points.point(tuple[2]));
        if (theta) return {*theta};
        break;
      }
      case Family::custom: {
        require(phi != nullptr, "custom scans need a phi function");
        std::vector<std::span<const double>> args;
        for (auto j : tuple) args.push_back(points.point(j));
        std::vector<double> out(phi->output_dim);
        phi->evaluate(args, out);
        return out;
      }
    }
  }
  fail(ErrorCode::infeasible, "could not draw a nondegenerate configuration");
}

}  // namespace

ScanReport run_scan(const ScanSpec& spec) {
  require(spec.schedule.size() >= 3, "scan needs at least three sizes");
  for (std::size_t i = 1; i < spec.schedule.size(); ++i) {
    require(spec.schedule[i] > spec.schedule[i - 1], "scan sizes must increase");
  }
  const count::PhiFunction* phi = spec.phi ? &*spec.phi : nullptr;
  if (spec.query.family == Family::custom) {
    require(phi != nullptr, "custom scans need a phi function");
    require(spec.predicted.has_value(), "custom scans need an explicit predicted exponent");
  }

  std::vector<PointSet> sets;
  sets.reserve(spec.schedule.size());
  for (std::size_t n : spec.schedule) sets.push_back(pointgen::generate(spec_for_size(spec.generator, n)));

  ScanReport report;
  report.generator = pointgen::to_string(spec.generator.kind);
  report.dim = sets.back().dim();
  report.seed = spec.generator.seed;
  if (spec.s) {
    report.s = *spec.s;
  } else {
    const auto& nominal = sets.back().meta().nominal_dimension;
    require(nominal.has_value(), "generator has no nominal dimension; set s explicitly");
    report.s = *nominal;
  }
  require(report.s > 0.0, "scan exponent s must be positive");

  report.query = spec.query;
  if (!spec.fixed_target) {
    report.query.t = realized_target(sets.back(), spec.query, phi, spec.generator.seed);
  }
  report.predicted = spec.predicted ? *spec.predicted
                                    : count_exponent(spec.query.family, spec.query.k,
                                                     report.dim, report.s);

  std::size_t zeros = 0;
  std::vector<std::pair<double, double>> samples;
  for (const auto& points : sets) {
    ScanRow row;
    row.n = points.size();
    row.delta = std::pow(static_cast<double>(row.n), -1.0 / report.s);
    count::ConfigQuery query = report.query;
    query.delta = row.delta;
    row.count = count::run_query(points, query, spec.algorithm, phi).count;
    if (spec.check_adaptability && points.size() >= 1) {
      row.adaptability = energy::is_adaptable(points, report.s, spec.adaptability_constant);
    }
    if (row.count == 0) ++zeros;
    samples.emplace_back(static_cast<double>(row.n), static_cast<double>(row.count));
    report.rows.push_back(row);
  }

  if (2 * zeros > report.rows.size()) {
    report.verdict = Verdict::inconclusive;
    report.note = std::to_string(zeros) + " of " + std::to_string(report.rows.size()) +
                  " counts are zero";
    return report;
  }
  std::size_t positive = report.rows.size() - zeros;
  if (positive < 3) {
    report.verdict = Verdict::inconclusive;
    report.note = "fewer than three nonzero counts";
    return report;
  }
  report.fit = fit_slope(samples);
  report.verdict = report.fit->slope - 2.0 * report.fit->stderr_slope > report.predicted
                       ? Verdict::exceeds
                       : Verdict::consistent;
  return report;
}

}  // namespace configeo::expfit
