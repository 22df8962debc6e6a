#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace qfock::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kUsageError = 2 };

/// Shared settings for every subcommand. Defaults, then the JSON file named
/// by QFOCK_CONFIG, then command-line flags.
struct RunConfig {
  double q = 0.5;
  int modes = 16;
  int depth = 400;
  std::optional<double> tol;
  std::string format = "csv";
  std::uint64_t seed = 42;
};

/// Reads a RunConfig from a JSON object; unknown keys are rejected.
/// Throws std::invalid_argument on malformed input.
RunConfig parse_config_json(const std::string& text, RunConfig base = {});

/// Runs the command line (without the program name). Artifacts go to `out`
/// unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qfock::cli
