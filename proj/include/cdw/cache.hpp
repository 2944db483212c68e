#pragma once

#include <optional>
#include <string>

#include "cdw/generators.hpp"

namespace cdw {

/// On-disk operator cache: one container file per (L_max, N, omega-range,
/// convention) key holding every base generator block. Layout: magic,
/// format version, little-endian u64 header length, JSON header (dims and a
/// block index), then all matrix payloads as little-endian binary64 re/im
/// pairs in column-major order.
class OperatorCache {
 public:
  explicit OperatorCache(std::string root) : root_(std::move(root)) {}

  std::string key_for(int l_max, int n, double omega_min, double omega_max) const;
  std::string path_for(const std::string& key) const;

  void store(const std::string& key, const GeneratorSet& g, const ScalarSpace& space) const;
  /// Empty when the file is absent. Throws CacheVersionError on a version or
  /// convention mismatch (callers refuse unless rebuilding was requested).
  std::optional<GeneratorSet> load(const std::string& key, const ScalarSpace& space) const;

 private:
  std::string root_;
};

struct CacheVersionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr int kCacheFormatVersion = 1;

}  // namespace cdw
