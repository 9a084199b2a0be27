#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

namespace koszul::runner {

/// Bad flags, malformed config, or a model that does not match the requested
/// cell. Exit code 64.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Command { Betti, Mrc, Gv, VerifySecantWitness, VerifyNonContainment, VerifyKp1Propagation, VerifyTwistedQuotient, Induct };

const char* to_string(Command command);
Command parse_command(const std::string& text);

struct Cell {
  long g = 0;
  long r = 0;
  long d = 0;
  long p = 1;

  long h1() const { return g - d + r; }
  long rho() const { return g - (r + 1) * h1(); }
};

struct RunConfig {
  Command command = Command::Betti;
  std::optional<Cell> cell;
  long steps = 0;
  long p = 1;
  std::uint64_t seed = 0;
  /// Built-in model name or an explicit model document.
  std::optional<nlohmann::json> model;
  std::string output;
  std::optional<std::string> cache_dir;
  unsigned jobs = 1;
  /// Number of seeded instances for the verify-* batch commands.
  long samples = 25;
  /// Adds wall-clock seconds to certificate telemetry (breaks byte-identity).
  bool timing = false;
};

/// Parses and validates a config document. Throws UsageError.
RunConfig parse_config(const nlohmann::json& doc);
RunConfig load_config(const std::string& path);

/// The config fields that determine results (execution details such as the
/// output path, cache directory and job count are left out).
nlohmann::json config_echo(const RunConfig& config);

}  // namespace koszul::runner
