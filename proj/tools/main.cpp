#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "koszul/runner/run.hpp"

int main(int argc, char** argv) {
  using namespace koszul::runner;

  CLI::App app{"Exact Koszul cohomology certificates for nodal curve models"};
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> output;
  std::optional<std::string> cache;
  std::optional<unsigned> jobs;
  app.add_option("--config", config_path, "JSON run configuration")->required();
  app.add_option("--seed", seed, "override the configured seed");
  app.add_option("--output", output, "result file (JSON envelope)");
  app.add_option("--cache", cache, "result cache directory");
  app.add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  RunConfig config;
  try {
    config = load_config(config_path);
  } catch (const UsageError& e) {
    std::cerr << "koszulcert: " << e.what() << "\n";
    return kUsage;
  }
  if (seed) config.seed = *seed;
  if (output) config.output = *output;
  if (jobs) config.jobs = *jobs;
  // Precedence for the cache directory: flag, then CACHE_DIR, then config.
  if (cache) {
    config.cache_dir = *cache;
  } else if (const char* env = std::getenv("CACHE_DIR"); env && *env) {
    config.cache_dir = env;
  }

  const RunOutcome outcome = run(config);
  if (!outcome.message.empty()) std::cerr << "koszulcert: " << outcome.message << "\n";
  if (config.output.empty()) std::cout << outcome.envelope.dump(2) << "\n";
  return outcome.exit_code;
}
