#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

namespace koszul::runner {

struct CacheEntry {
  std::uint64_t key = 0;
  std::string value;  // serialized result
  std::string engine_version;
};

/// File cache: one JSON file per key under a directory. Entries written by a
/// different engine version are ignored.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path dir);

  static std::uint64_t make_key(const std::string& model, const std::string& operation,
                                const nlohmann::json& parameters);

  std::optional<CacheEntry> lookup(std::uint64_t key) const;
  void store(const CacheEntry& entry) const;
  std::filesystem::path path_for(std::uint64_t key) const;

  /// Hits with key % 10 == 0 are recomputed and compared.
  static bool audited(std::uint64_t key) { return key % 10 == 0; }

 private:
  std::filesystem::path dir_;
};

/// Writes to a temporary sibling and renames it into place.
void write_file_atomic(const std::filesystem::path& path, const std::string& contents);

}  // namespace koszul::runner
