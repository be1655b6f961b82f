#pragma once

#include <filesystem>
#include <optional>
#include <string>

namespace loopchar {

/// On-disk memo of serialized results. One file per key, named by a hash of
/// the key; the file stores the key itself so collisions read as misses.
class ResultCache {
 public:
  static constexpr int kVersion = 1;

  explicit ResultCache(std::filesystem::path dir);

  /// Directory from an explicit flag, else $LOOPCHAR_CACHE, else none.
  static std::optional<ResultCache> open(const std::optional<std::string>& flag);

  std::optional<std::string> get(const std::string& key) const;
  /// Written to a temporary file and renamed into place.
  void put(const std::string& key, const std::string& value) const;

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path path_for(const std::string& key) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace loopchar
