#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cdw/verify.hpp"

namespace cdw {

struct MassTriple {
  double m = 1.0;
  double m_prime = 0.0;
  double delta = 0.1;
};

/// Run configuration: flat key = value text file plus command-line overrides.
/// Canonical serialization sorts keys so the config hash is stable.
struct RunConfig {
  int l_max = 6;
  int n_radial = 64;
  double omega_min = 0.1;
  double omega_max = 10.0;
  std::uint64_t seed = 20240901;
  int n_vectors = 20;
  int delta_ell = 2;
  std::vector<int> helicities = {1, 2, 3};
  std::vector<MassTriple> masses = {{1.0, 0.0, 0.1}, {1.0, 0.5, 0.1}};
  std::string cache_dir;  // empty = caching disabled
  std::string out_path;   // empty = stdout only
  int jobs = 1;
  bool rebuild_cache = false;
  Tolerances tol;

  /// throws std::invalid_argument on malformed keys/values or out-of-range
  void set(const std::string& key, const std::string& value);

  std::string canonical() const;
  std::string hash() const;  // FNV-1a over the canonical form, hex
  void validate() const;
};

RunConfig parse_config_file(const std::string& path);
/// "key=value" strings, applied in order on top of base.
void apply_overrides(RunConfig& cfg, const std::vector<std::string>& sets);

}  // namespace cdw
