#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dioph {

/// FNV-1a over the bytes, rendered as 16 lower-case hex digits.
std::string fnv1a_digest(std::string_view bytes);

/// Append-only store of finished runs, one JSON object per line keyed by the
/// canonical request. The digest is only an index: a hit requires the stored
/// request to compare equal byte for byte, so digest collisions merely cost
/// a recompute. Corrupt lines are skipped and reported, never fatal.
class ResultCache {
 public:
  // Loads the file if it exists and verifies the path is appendable.
  explicit ResultCache(std::filesystem::path file);

  std::optional<std::vector<std::string>> lookup(std::string_view canonical_request) const;
  void store(std::string_view canonical_request, const std::vector<std::string>& record_lines);

  const std::vector<std::string>& warnings() const { return warnings_; }
  const std::filesystem::path& path() const { return file_; }

 private:
  struct Entry {
    std::string digest;
    std::string request;
    std::vector<std::string> records;
  };

  std::filesystem::path file_;
  std::vector<Entry> entries_;
  std::vector<std::string> warnings_;
};

}  // namespace dioph
