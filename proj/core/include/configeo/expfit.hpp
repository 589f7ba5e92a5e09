#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "configeo/configcount.hpp"
#include "configeo/energy.hpp"
#include "configeo/pointset.hpp"

namespace configeo::expfit {

using Rational = boost::rational<long long>;

// Dimension thresholds above which the configuration sets are known to
// have positive measure, and the matching discrete count exponents.
//
//   simplex  s0 = d - (d-1)/(2k)                 exponent k+1 - C(k+1,2)/s
//   volume   s0 = d-1 + 1/(2d)      (d even)     exponent d+1 - 1/s
//            s0 = d-1 + 1/(2(d-1))  (d odd)
//   area2    s0 = d/2 + 1/4                      exponent 3 - 1/s
//   angle    s0 = (d+1)/2                        exponent 3 - 1/s

/// Throws Error(invalid_argument) for incompatible (family, k, d).
Rational threshold_exact(count::Family family, std::size_t k, std::size_t d);
double threshold(count::Family family, std::size_t k, std::size_t d);

Rational count_exponent_exact(count::Family family, std::size_t k, std::size_t d,
                              Rational s);
double count_exponent(count::Family family, std::size_t k, std::size_t d, double s);

struct SlopeFit {
  double slope = 0.0;
  double stderr_slope = 0.0;
  std::size_t used = 0;  // samples left after dropping y <= 0
};

/// OLS on (log n, log y); samples with y <= 0 are dropped. Needs three
/// survivors, otherwise Error(infeasible).
SlopeFit fit_slope(std::span<const std::pair<double, double>> samples);

enum class Verdict { consistent, exceeds, inconclusive };
const char* to_string(Verdict verdict) noexcept;

struct ScanSpec {
  pointgen::GeneratorSpec generator;       // size fields are set per n
  count::ConfigQuery query;                // delta is replaced by n^{-1/s}
  std::vector<std::size_t> schedule;       // increasing n values
  std::optional<double> s;                 // defaults to nominal dimension
  bool fixed_target = false;               // false: sample t from the largest set
  std::optional<double> predicted;         // required for Family::custom
  std::optional<count::PhiFunction> phi;   // required for Family::custom
  double adaptability_constant = energy::kDefaultAdaptabilityConstant;
  bool check_adaptability = true;
  count::Algorithm algorithm = count::Algorithm::pruned;
};

struct ScanRow {
  std::size_t n = 0;
  double delta = 0.0;
  std::uint64_t count = 0;
  std::optional<energy::EnergyReport> adaptability;
};

struct ScanReport {
  count::ConfigQuery query;  // with the target actually used
  std::string generator;
  std::size_t dim = 0;
  double s = 0.0;
  std::uint64_t seed = 0;
  std::vector<ScanRow> rows;
  std::optional<SlopeFit> fit;
  double predicted = 0.0;
  Verdict verdict = Verdict::inconclusive;
  std::string note;
};

/// Generator parameters realizing roughly n points; the actual size is the
/// nearest the family admits (perfect powers for lattices, 2^{dL} for
/// Cantor sets).
pointgen::GeneratorSpec spec_for_size(const pointgen::GeneratorSpec& base, std::size_t n);

/// Counts at delta_n = n^{-1/s} over the schedule, fits the growth exponent
/// and compares it with count_exponent. exceeds iff slope - 2 stderr >
/// predicted; inconclusive if more than half the counts are zero or the fit
/// has fewer than three points.
ScanReport run_scan(const ScanSpec& spec);

}  // namespace configeo::expfit
