#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "configeo/configcount.hpp"
#include "configeo/fourier.hpp"
#include "configeo/pointset.hpp"

namespace configeo::cli {

inline constexpr const char* kSeedEnv = "CONFIGEO_SEED";
inline constexpr std::uint64_t kFallbackSeed = 1;

enum class Command { gen, energy, count, scan, ft, curvature, dim };
const char* to_string(Command command) noexcept;
Command command_from_string(const std::string& name);

/// Every accepted `section.key` (top-level keys have no dot).
const std::set<std::string>& config_keys();

/// Flat `section.key -> value` store. Keys outside any section have no dot.
///
/// Grammar, one statement per line:
///   # comment            (also after a value: `k = v  # note`)
///   [section]
///   key = value
/// Blank lines are ignored; keys are [A-Za-z0-9_]+; a repeated key on a
/// later line overrides the earlier one.
class KeyValues {
 public:
  struct Entry {
    std::string value;
    std::string origin;  // "file:line" or "flag"
  };

  /// Throws Error(parse) naming `source` and the line number.
  static KeyValues parse(std::string_view text, const std::string& source);
  static KeyValues load(const std::string& path);

  void set(const std::string& key, std::string value, std::string origin);
  /// Parses `section.key=value`; throws Error(parse) when malformed.
  void set_assignment(const std::string& assignment, std::string origin);
  std::optional<std::string> get(const std::string& key) const;
  const Entry* find(const std::string& key) const;
  bool contains(const std::string& key) const { return find(key) != nullptr; }
  const std::map<std::string, Entry>& entries() const { return entries_; }

 private:
  std::map<std::string, Entry> entries_;
};

struct EnergySettings {
  std::vector<double> s;
  double constant = 10.0;
};

struct ScanSettings {
  std::vector<std::size_t> sizes;
  std::optional<double> s;
  bool fixed_target = false;
  std::optional<double> predicted;
  bool check_adaptability = true;
  double adaptability_constant = 10.0;
};

enum class FtMethod { closed, montecarlo };

struct FtSettings {
  fourier::MeasureSpec measure;
  std::vector<double> direction;  // flattened blocks, unit length
  std::vector<double> radii;
  double r_min = 0.0, r_max = 0.0, step = 0.0;  // step > 0: radii span r_min..r_max
  FtMethod method = FtMethod::closed;
  fourier::MonteCarloOptions mc;
  fourier::DecayFitOptions fit;
};

enum class CurvatureCheck { level_set, circulant, phase_hessian };

struct CurvatureSettings {
  CurvatureCheck check = CurvatureCheck::level_set;
  std::string field = "sphere";
  std::size_t dim = 3;
  double h = 1e-4;
  double tolerance = 1e-6;
  std::vector<double> xi;
  std::vector<double> eta;
  bool on_plane = false;
};

enum class DimSource { points, solution_set };

struct DimSettings {
  DimSource source = DimSource::points;
  std::vector<double> scales;
  std::vector<double> t;   // solution_set: target of x - y
  double delta = 1e-9;     // solution_set: strict max-norm tolerance
};

struct ExperimentConfig {
  Command command = Command::gen;
  std::uint64_t seed = kFallbackSeed;
  std::string output_dir = "configeo-out";
  std::size_t threads = 0;  // 0: hardware concurrency
  bool timing = false;      // write wall-clock times into report files
  count::Algorithm algorithm = count::Algorithm::pruned;

  pointgen::GeneratorSpec generator;
  count::ConfigQuery query;
  EnergySettings energy;
  ScanSettings scan;
  FtSettings ft;
  CurvatureSettings curvature;
  DimSettings dim;
};

/// Builds and validates a config. `seed_env` is the value of CONFIGEO_SEED
/// (if set), used when the store has no `seed`. Throws Error(parse) naming
/// the offending field and its origin.
ExperimentConfig parse_config(const KeyValues& kv,
                              std::optional<std::string> seed_env = std::nullopt);

/// Canonical `key = value` text of every setting the command uses, defaults
/// included. Feeding it back through parse_config reproduces the config.
std::string render_config(const ExperimentConfig& config);

/// Shortest round-trip text for a double.
std::string format_double(double v);
std::string format_list(const std::vector<double>& values, const char* sep = ",");

}  // namespace configeo::cli
