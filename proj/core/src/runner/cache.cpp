#include "koszul/runner/cache.hpp"

#include <fstream>
#include <sstream>

#include "koszul/curves/serialization.hpp"
#include "koszul/runner/version.hpp"

namespace koszul::runner {

namespace fs = std::filesystem;

ResultCache::ResultCache(fs::path dir) : dir_(std::move(dir)) {}

std::uint64_t ResultCache::make_key(const std::string& model, const std::string& operation,
                                    const nlohmann::json& parameters) {
  const std::string material =
      model + '\x1f' + operation + '\x1f' + parameters.dump() + '\x1f' + kEngineVersion;
  return curves::fnv1a(material);
}

fs::path ResultCache::path_for(std::uint64_t key) const {
  return dir_ / (curves::hash_hex(key) + ".json");
}

std::optional<CacheEntry> ResultCache::lookup(std::uint64_t key) const {
  std::ifstream in(path_for(key));
  if (!in) return std::nullopt;
  try {
    const auto doc = nlohmann::json::parse(in);
    CacheEntry entry{doc.at("key").get<std::uint64_t>(), doc.at("value").get<std::string>(),
                     doc.at("engine_version").get<std::string>()};
    if (entry.key != key || entry.engine_version != kEngineVersion) return std::nullopt;
    return entry;
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;  // unreadable entries are treated as misses and overwritten
  }
}

void ResultCache::store(const CacheEntry& entry) const {
  fs::create_directories(dir_);
  const nlohmann::json doc = {
      {"key", entry.key}, {"value", entry.value}, {"engine_version", entry.engine_version}};
  write_file_atomic(path_for(entry.key), doc.dump());
}

void write_file_atomic(const fs::path& path, const std::string& contents) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write '" + tmp.string() + "'");
    out << contents;
    out.flush();
    if (!out) throw std::runtime_error("write to '" + tmp.string() + "' failed");
  }
  fs::rename(tmp, path);
}

}  // namespace koszul::runner
