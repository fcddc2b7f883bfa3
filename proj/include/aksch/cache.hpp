#pragma once

// Per-shape tableau counts for (n, r, m), optionally persisted in one
// versioned JSON file. A missing, unreadable or mismatched file is treated as
// empty and rewritten; writes go to a temporary file that is then renamed.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

#include "aksch/combinatorics.hpp"

namespace aksch {

inline constexpr int kCacheSchema = 1;

struct ShapeCounts {
  Multipartition shape;
  std::uint64_t standard = 0;
  std::uint64_t semistandard = 0;
  friend bool operator==(const ShapeCounts&, const ShapeCounts&) = default;
};

class EnumerationCache {
 public:
  explicit EnumerationCache(std::filesystem::path dir);

  std::filesystem::path file() const { return dir_ / "aksch-enumeration-cache.json"; }
  std::optional<std::vector<ShapeCounts>> lookup(int n, int r, const std::vector<int>& m) const;
  // Throws IoError if the file cannot be written.
  void store(int n, int r, const std::vector<int>& m, const std::vector<ShapeCounts>& counts) const;

 private:
  std::filesystem::path dir_;
};

struct DimsResult {
  int n = 0;
  int r = 0;
  std::vector<int> m;
  std::vector<ShapeCounts> shapes;
  std::uint64_t dim_hecke = 0;
  std::uint64_t dim_schur = 0;
  bool cache_hit = false;
};

std::vector<ShapeCounts> shape_counts(int n, int r, const std::vector<int>& m);
// m empty means the default bounds. cache may be null.
DimsResult compute_dims(int n, int r, std::vector<int> m, const EnumerationCache* cache);

}  // namespace aksch
