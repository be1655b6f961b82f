#include "loopchar/cache.hpp"

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <system_error>

#include <unistd.h>

#include <json.hpp>

namespace loopchar {

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

ResultCache::ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::optional<ResultCache> ResultCache::open(const std::optional<std::string>& flag) {
  if (flag && !flag->empty()) return ResultCache(*flag);
  if (const char* env = std::getenv("LOOPCHAR_CACHE"); env && *env) return ResultCache(env);
  return std::nullopt;
}

std::filesystem::path ResultCache::path_for(const std::string& key) const {
  std::ostringstream name;
  name << std::hex << fnv1a(key) << ".json";
  return dir_ / name.str();
}

std::optional<std::string> ResultCache::get(const std::string& key) const {
  std::ifstream in(path_for(key));
  if (!in) return std::nullopt;
  const auto entry = nlohmann::json::parse(in, nullptr, /*allow_exceptions=*/false);
  if (entry.is_discarded() || !entry.is_object()) return std::nullopt;
  if (entry.value("version", -1) != kVersion) return std::nullopt;
  if (entry.value("key", std::string()) != key) return std::nullopt;
  auto it = entry.find("value");
  if (it == entry.end() || !it->is_string()) return std::nullopt;
  return it->get<std::string>();
}

void ResultCache::put(const std::string& key, const std::string& value) const {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) return;
  static std::atomic<unsigned> counter{0};
  const auto target = path_for(key);
  auto tmp = target;
  tmp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter++);
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) return;
    out << nlohmann::json{{"version", kVersion}, {"key", key}, {"value", value}}.dump();
    if (!out) {
      std::filesystem::remove(tmp, ec);
      return;
    }
  }
  std::filesystem::rename(tmp, target, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

}  // namespace loopchar
