#include <cstdlib>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "configeo/cli/config.hpp"
#include "configeo/cli/runner.hpp"
#include "configeo/error.hpp"

namespace {

// generator.side -> generator-side, ft.r_min -> ft-r-min
std::string flag_name(const std::string& key) {
  std::string out = key;
  for (char& c : out) {
    if (c == '.' || c == '_') c = '-';
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace configeo;

  CLI::App app{"configeo: configuration counting and Fourier decay experiments"};
  app.set_version_flag("--version", cli::tool_version());

  std::string command, config_path, out_dir, algorithm;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> threads;
  bool timing = false;
  std::vector<std::string> assignments;

  app.add_option("command", command, "gen, energy, count, scan, ft, curvature or dim");
  app.add_option("--config,-c", config_path, "Experiment config file")
      ->check(CLI::ExistingFile);
  app.add_option("--out,-o", out_dir, "Output directory");
  app.add_option("--seed", seed, "Seed (default: $CONFIGEO_SEED, then 1)");
  app.add_option("--threads", threads, "Worker cap, 0 for all cores");
  app.add_option("--algorithm", algorithm, "brute or pruned")
      ->check(CLI::IsMember({"brute", "pruned"}));
  app.add_flag("--timing", timing, "Record wall-clock times in report files");
  app.add_option("--set", assignments, "Override any field: section.key=value")
      ->take_all();

  const std::set<std::string> direct = {"command", "seed", "out", "threads", "algorithm",
                                        "timing"};
  std::map<std::string, std::string> shortcuts;
  for (const auto& key : cli::config_keys()) {
    if (direct.contains(key)) continue;
    app.add_option("--" + flag_name(key), shortcuts[key], "Same as " + key)
        ->group("Config fields");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? cli::kExitOk : cli::kExitUsage;
  }

  try {
    cli::KeyValues kv;
    if (!config_path.empty()) kv = cli::KeyValues::load(config_path);
    // Flags override file values.
    for (const auto& a : assignments) kv.set_assignment(a, "--set");
    for (const auto& [key, value] : shortcuts) {
      if (app.get_option("--" + flag_name(key))->count() > 0) {
        kv.set(key, value, "--" + flag_name(key));
      }
    }
    if (!command.empty()) kv.set("command", command, "command line");
    if (!out_dir.empty()) kv.set("out", out_dir, "--out");
    if (seed) kv.set("seed", std::to_string(*seed), "--seed");
    if (threads) kv.set("threads", std::to_string(*threads), "--threads");
    if (!algorithm.empty()) kv.set("algorithm", algorithm, "--algorithm");
    if (timing) kv.set("timing", "true", "--timing");

    std::optional<std::string> env_seed;
    if (const char* v = std::getenv(cli::kSeedEnv)) env_seed = v;
    const auto config = cli::parse_config(kv, env_seed);
    const auto result = cli::run(config);
    std::cout << result.summary << std::endl;
    return result.exit_code;
  } catch (const Error& e) {
    std::cerr << "configeo: " << to_string(e.code()) << ": " << e.what() << std::endl;
    return cli::exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "configeo: error: " << e.what() << std::endl;
    return cli::kExitUsage;
  }
}
