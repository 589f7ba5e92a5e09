#pragma once

#include <string>
#include <vector>

#include "configeo/cli/config.hpp"
#include "configeo/configcount.hpp"
#include "configeo/error.hpp"
#include "configeo/expfit.hpp"
#include "configeo/fourier.hpp"

namespace configeo::cli {

enum ExitCode : int { kExitOk = 0, kExitInconclusive = 1, kExitUsage = 2 };

/// 1 for results that ran but found nothing (infeasible, coincident points),
/// 2 for misuse (bad arguments, parse or I/O errors, exceeded budgets).
int exit_code_for(ErrorCode code) noexcept;

const char* tool_version() noexcept;

struct RunResult {
  int exit_code = kExitOk;
  std::string summary;             // one line, no trailing newline
  std::vector<std::string> files;  // written, relative to output_dir
};

/// Executes the experiment and writes manifest.txt plus the command's
/// reports into config.output_dir. Errors propagate as configeo::Error.
RunResult run(const ExperimentConfig& config);

// Report bodies; all are deterministic functions of their inputs.
std::string manifest_text(const ExperimentConfig& config);
std::string count_csv(const count::CountReport& report, std::uint64_t seed, bool timing);
std::string scan_csv(const expfit::ScanReport& report);
std::string scan_text(const expfit::ScanReport& report);
/// scan_<family>_k<k>_d<d>_s<s>_seed<seed>
std::string scan_file_stem(const expfit::ScanReport& report);
std::string decay_csv(const fourier::DecayReport& report);
std::string decay_text(const fourier::DecayReport& report);
std::string boxdim_csv(const count::BoxDimReport& report);

}  // namespace configeo::cli
