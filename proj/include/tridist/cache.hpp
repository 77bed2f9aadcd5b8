#pragma once

// On-disk store of search reports. Each entry is a single-line JSON record in
// its own file under the cache directory:
//
//   {"checksum":"<fnv1a-64 hex>","elapsed_seconds":...,"m":7,"menu":[1,3,...],
//    "menu_hash":"...","method":"clique","multiplicities":[...],
//    "nodes_explored":...,"optimal":true,"overshoot":false,
//    "points":[[0,0],[0,1],...],"remark":"...","schema_version":1,"size":16}
//
// The checksum covers the compact dump of every other field (keys sorted).

#include <filesystem>
#include <mutex>
#include <optional>
#include <string>

#include "tridist/search.hpp"

namespace tridist {

inline constexpr int kCacheSchemaVersion = 1;

/// Encodes a report as one line of JSON (no trailing newline), checksum included.
std::string encode_report(const SearchReport& report);
/// Throws ChecksumError on a checksum mismatch and FormatError on malformed input.
SearchReport decode_report(const std::string& line);

class ResultCache {
 public:
  /// Creates the directory if needed.
  explicit ResultCache(std::filesystem::path dir);

  const std::filesystem::path& dir() const { return dir_; }

  void store(const SearchReport& report);
  /// Absent entries yield nullopt. A tampered entry throws ChecksumError.
  /// Clique entries whose menu is not the m smallest distances are treated as absent.
  std::optional<SearchReport> load(std::size_t m, Method method) const;
  std::filesystem::path entry_path(std::size_t m, Method method) const;

 private:
  std::filesystem::path dir_;
  mutable std::mutex mutex_;
};

}  // namespace tridist
