#include "koszul/runner/config.hpp"

#include <array>
#include <fstream>
#include <set>

namespace koszul::runner {

using nlohmann::json;

namespace {

constexpr std::array<std::pair<Command, const char*>, 8> kCommands = {{
    {Command::Betti, "betti"},
    {Command::Mrc, "mrc"},
    {Command::Gv, "gv"},
    {Command::VerifySecantWitness, "verify-lemma21"},
    {Command::VerifyNonContainment, "verify-lemma22"},
    {Command::VerifyKp1Propagation, "verify-prop11"},
    {Command::VerifyTwistedQuotient, "verify-prop14"},
    {Command::Induct, "induct"},
}};

long integer_field(const json& doc, const char* key, long lo) {
  const json& v = doc.at(key);
  if (!v.is_number_integer()) throw UsageError(std::string("'") + key + "' must be an integer");
  const long value = v.get<long>();
  if (value < lo) {
    throw UsageError(std::string("'") + key + "' must be >= " + std::to_string(lo));
  }
  return value;
}

Cell parse_cell(const json& doc) {
  Cell c;
  if (doc.is_array()) {
    if (doc.size() != 3 && doc.size() != 4) throw UsageError("'cell' must be [g, r, d] or [g, r, d, p]");
    json obj = {{"g", doc[0]}, {"r", doc[1]}, {"d", doc[2]}};
    if (doc.size() == 4) obj["p"] = doc[3];
    return parse_cell(obj);
  }
  if (!doc.is_object()) throw UsageError("'cell' must be an object or an array");
  for (const auto& [key, _] : doc.items()) {
    if (key != "g" && key != "r" && key != "d" && key != "p") {
      throw UsageError("unknown cell field '" + key + "'");
    }
  }
  for (const char* key : {"g", "r", "d"}) {
    if (!doc.contains(key)) throw UsageError(std::string("'cell' is missing '") + key + "'");
  }
  c.g = integer_field(doc, "g", 0);
  c.r = integer_field(doc, "r", 1);
  c.d = integer_field(doc, "d", 1);
  if (doc.contains("p")) c.p = integer_field(doc, "p", 0);
  return c;
}

}  // namespace

const char* to_string(Command command) {
  for (const auto& [c, name] : kCommands) {
    if (c == command) return name;
  }
  return "?";
}

Command parse_command(const std::string& text) {
  for (const auto& [c, name] : kCommands) {
    if (text == name) return c;
  }
  throw UsageError("unknown command '" + text + "'");
}

RunConfig parse_config(const json& doc) {
  if (!doc.is_object()) throw UsageError("config must be a JSON object");
  static const std::set<std::string> known = {"command", "cell",  "steps",   "seed",   "model",
                                              "output",  "cache_dir", "jobs", "samples", "timing",
                                              "p"};
  for (const auto& [key, _] : doc.items()) {
    if (!known.contains(key)) throw UsageError("unknown config field '" + key + "'");
  }
  if (!doc.contains("command") || !doc["command"].is_string()) {
    throw UsageError("'command' is required and must be a string");
  }
  RunConfig config;
  config.command = parse_command(doc["command"].get<std::string>());
  if (doc.contains("cell")) {
    config.cell = parse_cell(doc["cell"]);
    config.p = config.cell->p;
  }
  if (doc.contains("p")) {
    config.p = integer_field(doc, "p", 0);
    if (config.cell) config.cell->p = config.p;
  }
  if (doc.contains("steps")) config.steps = integer_field(doc, "steps", 0);
  if (doc.contains("seed")) {
    const json& s = doc["seed"];
    if (!s.is_number_unsigned() && !(s.is_number_integer() && s.get<long long>() >= 0)) {
      throw UsageError("'seed' must be a non-negative integer");
    }
    config.seed = s.get<std::uint64_t>();
  }
  if (doc.contains("model")) {
    const json& m = doc["model"];
    if (!m.is_string() && !m.is_object()) {
      throw UsageError("'model' must be a built-in model name or a model object");
    }
    config.model = m;
  }
  if (doc.contains("output")) {
    if (!doc["output"].is_string()) throw UsageError("'output' must be a path string");
    config.output = doc["output"].get<std::string>();
  }
  if (doc.contains("cache_dir")) {
    if (!doc["cache_dir"].is_string()) throw UsageError("'cache_dir' must be a path string");
    config.cache_dir = doc["cache_dir"].get<std::string>();
  }
  if (doc.contains("jobs")) config.jobs = static_cast<unsigned>(integer_field(doc, "jobs", 1));
  if (doc.contains("samples")) config.samples = integer_field(doc, "samples", 1);
  if (doc.contains("timing")) {
    if (!doc["timing"].is_boolean()) throw UsageError("'timing' must be a boolean");
    config.timing = doc["timing"].get<bool>();
  }
  if (!config.model && !config.cell) throw UsageError("either 'model' or 'cell' is required");
  return config;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError("config '" + path + "' is not valid JSON: " + e.what());
  }
  return parse_config(doc);
}

json config_echo(const RunConfig& config) {
  json echo = {{"command", to_string(config.command)},
               {"steps", config.steps},
               {"p", config.p},
               {"seed", config.seed},
               {"samples", config.samples},
               {"timing", config.timing}};
  if (config.cell) {
    echo["cell"] = {{"g", config.cell->g}, {"r", config.cell->r}, {"d", config.cell->d},
                    {"p", config.cell->p}};
  }
  if (config.model) echo["model"] = *config.model;
  return echo;
}

}  // namespace koszul::runner
