#pragma once

#include <map>
#include <string>
#include <vector>

namespace cdw {

struct CheckResult {
  std::string check_id;
  std::map<std::string, std::string> params;
  double residual = 0;
  double tolerance = 0;
  bool pass = false;
  double wall_time_ms = 0;
};

class Report {
 public:
  /// Records pass = residual <= tolerance and returns it.
  bool add(std::string check_id, double residual, double tolerance,
           std::map<std::string, std::string> params = {}, double wall_ms = 0);
  /// For checks that must exceed a threshold (negative controls).
  bool add_exceeds(std::string check_id, double residual, double threshold,
                   std::map<std::string, std::string> params = {}, double wall_ms = 0);

  void merge(const Report& o);
  void sort_by_id();

  bool all_pass() const;
  const std::vector<CheckResult>& results() const { return results_; }
  std::vector<CheckResult>& results() { return results_; }

  std::map<std::string, std::string> meta;

  /// JSON document; volatile fields (timestamp, timings) live under meta only.
  std::string to_json() const;
  static Report from_json(const std::string& text);

  std::string summary() const;

 private:
  std::vector<CheckResult> results_;
};

/// Writes atomically (temp file + rename).
void write_file_atomic(const std::string& path, const std::string& contents);
std::string read_file(const std::string& path);

}  // namespace cdw
