#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <ostream>
#include <string>

namespace artlab {

struct CacheEntry {
  std::string key;
  std::string version;
  std::int64_t created_at = 0;  // unix seconds
  int exit_code = 0;
  std::string output;
};

/// Directory of serialized command outputs, one file per (version, key).
/// Unreadable or corrupted entries are reported on `warn` and treated as
/// misses; an unwritable directory only disables storing.
class ResultCache {
 public:
  ResultCache(std::filesystem::path dir, std::string version, std::ostream& warn);

  std::optional<CacheEntry> load(const std::string& key) const;
  bool store(const std::string& key, int exit_code, const std::string& output) const;
  std::filesystem::path path_for(const std::string& key) const;

 private:
  std::filesystem::path dir_;
  std::string version_;
  std::ostream* warn_;
};

struct CachedResult {
  std::string output;
  int exit_code = 0;
  bool from_cache = false;
};

/// Without a directory this just runs `compute`.
CachedResult cache_roundtrip(const std::optional<std::filesystem::path>& dir, const std::string& version,
                             const std::string& key, const std::function<std::pair<std::string, int>()>& compute,
                             std::ostream& warn);

}  // namespace artlab
