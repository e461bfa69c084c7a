#include "artlab/cache.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>

#include <json.hpp>

namespace artlab {

namespace fs = std::filesystem;

namespace {

std::string fnv1a_hex(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << h;
  return out.str();
}

}  // namespace

ResultCache::ResultCache(fs::path dir, std::string version, std::ostream& warn)
    : dir_(std::move(dir)), version_(std::move(version)), warn_(&warn) {}

fs::path ResultCache::path_for(const std::string& key) const {
  return dir_ / (fnv1a_hex(version_ + '\n' + key) + ".json");
}

std::optional<CacheEntry> ResultCache::load(const std::string& key) const {
  const fs::path path = path_for(key);
  std::error_code ec;
  if (!fs::exists(path, ec)) return std::nullopt;
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    *warn_ << "warning: cannot read cache file " << path.string() << "\n";
    return std::nullopt;
  }
  try {
    const auto j = nlohmann::json::parse(in);
    CacheEntry e{j.at("key").get<std::string>(), j.at("version").get<std::string>(),
                 j.at("created_at").get<std::int64_t>(), j.at("exit_code").get<int>(),
                 j.at("output").get<std::string>()};
    if (e.key != key || e.version != version_) return std::nullopt;
    return e;
  } catch (const nlohmann::json::exception&) {
    *warn_ << "warning: ignoring corrupted cache file " << path.string() << "\n";
    return std::nullopt;
  }
}

bool ResultCache::store(const std::string& key, int exit_code, const std::string& output) const {
  std::error_code ec;
  fs::create_directories(dir_, ec);
  const fs::path target = path_for(key);
  std::random_device rd;
  const fs::path tmp = dir_ / (target.filename().string() + ".tmp" + std::to_string(rd()));
  const auto now = std::chrono::duration_cast<std::chrono::seconds>(
                       std::chrono::system_clock::now().time_since_epoch())
                       .count();
  const nlohmann::json j = {{"key", key}, {"version", version_}, {"created_at", now},
                            {"exit_code", exit_code}, {"output", output}};
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out || !(out << j.dump()) || !out.flush()) {
      *warn_ << "warning: cache directory " << dir_.string() << " is not writable; continuing uncached\n";
      fs::remove(tmp, ec);
      return false;
    }
  }
  fs::rename(tmp, target, ec);
  if (ec) {
    *warn_ << "warning: cannot write cache file " << target.string() << ": " << ec.message() << "\n";
    fs::remove(tmp, ec);
    return false;
  }
  return true;
}

CachedResult cache_roundtrip(const std::optional<fs::path>& dir, const std::string& version, const std::string& key,
                             const std::function<std::pair<std::string, int>()>& compute, std::ostream& warn) {
  if (!dir) {
    auto [out, code] = compute();
    return {std::move(out), code, false};
  }
  const ResultCache cache(*dir, version, warn);
  if (auto hit = cache.load(key)) return {std::move(hit->output), hit->exit_code, true};
  auto [out, code] = compute();
  cache.store(key, code, out);
  return {std::move(out), code, false};
}

}  // namespace artlab
