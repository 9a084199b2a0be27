#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "koszul/runner/config.hpp"

namespace koszul::runner {

enum ExitCode : int { kSuccess = 0, kFatal = 1, kInconclusive = 2, kUsage = 64 };

struct RunOutcome {
  int exit_code = kSuccess;
  nlohmann::json envelope;            // {engine_version, config_echo, results}
  std::vector<std::string> written;   // files written, in order
  bool cache_hit = false;
  std::string message;                // diagnostic for non-zero exits
};

/// Executes one configured command. Results are deterministic given the
/// config (seed included) and the engine version. Files are written only when
/// config.output is non-empty. Never throws for model or sampling problems:
/// they map to exit codes 1 (invariant violation), 2 (inconclusive) and 3
/// (usage or validation, 64).
RunOutcome run(const RunConfig& config);

/// Just the results payload, no files, no cache.
nlohmann::json compute_results(const RunConfig& config, int& exit_code);

}  // namespace koszul::runner
