#include "cdw/report.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace cdw {

using nlohmann::json;

bool Report::add(std::string check_id, double residual, double tolerance,
                 std::map<std::string, std::string> params, double wall_ms) {
  CheckResult r;
  r.check_id = std::move(check_id);
  r.params = std::move(params);
  r.residual = residual;
  r.tolerance = tolerance;
  r.pass = residual <= tolerance;
  r.wall_time_ms = wall_ms;
  results_.push_back(r);
  return r.pass;
}

bool Report::add_exceeds(std::string check_id, double residual, double threshold,
                         std::map<std::string, std::string> params, double wall_ms) {
  CheckResult r;
  r.check_id = std::move(check_id);
  r.params = std::move(params);
  r.params["mode"] = "exceeds";
  r.residual = residual;
  r.tolerance = threshold;
  r.pass = residual > threshold;
  r.wall_time_ms = wall_ms;
  results_.push_back(r);
  return r.pass;
}

void Report::merge(const Report& o) {
  for (const auto& r : o.results_) results_.push_back(r);
  for (const auto& [k, v] : o.meta)
    if (!meta.count(k)) meta[k] = v;
}

void Report::sort_by_id() {
  std::stable_sort(results_.begin(), results_.end(),
                   [](const CheckResult& a, const CheckResult& b) { return a.check_id < b.check_id; });
}

bool Report::all_pass() const {
  return std::all_of(results_.begin(), results_.end(), [](const CheckResult& r) { return r.pass; });
}

std::string Report::to_json() const {
  json doc;
  json m = json::object();
  for (const auto& [k, v] : meta) m[k] = v;
  json timings = json::object();
  doc["results"] = json::array();
  for (const auto& r : results_) {
    json jr;
    jr["check_id"] = r.check_id;
    json p = json::object();
    for (const auto& [k, v] : r.params) p[k] = v;
    jr["params"] = p;
    jr["residual"] = r.residual;
    jr["tolerance"] = r.tolerance;
    jr["pass"] = r.pass;
    doc["results"].push_back(jr);
    timings[r.check_id] = r.wall_time_ms;
  }
  m["timings_ms"] = timings;  // volatile; excluded from the determinism contract
  doc["meta"] = m;
  return doc.dump(2) + "\n";
}

Report Report::from_json(const std::string& text) {
  json doc = json::parse(text);
  Report rep;
  if (doc.contains("meta")) {
    for (auto& [k, v] : doc["meta"].items()) {
      if (v.is_string()) rep.meta[k] = v.get<std::string>();
    }
  }
  for (auto& jr : doc["results"]) {
    CheckResult r;
    r.check_id = jr["check_id"].get<std::string>();
    for (auto& [k, v] : jr["params"].items()) r.params[k] = v.get<std::string>();
    r.residual = jr["residual"].get<double>();
    r.tolerance = jr["tolerance"].get<double>();
    r.pass = jr["pass"].get<bool>();
    rep.results_.push_back(std::move(r));
  }
  return rep;
}

std::string Report::summary() const {
  std::ostringstream os;
  int npass = 0;
  for (const auto& r : results_) npass += r.pass ? 1 : 0;
  for (const auto& r : results_) {
    os << (r.pass ? "PASS" : "FAIL") << "  " << r.check_id;
    const bool exceeds = r.params.count("mode") && r.params.at("mode") == "exceeds";
    char buf[96];
    std::snprintf(buf, sizeof(buf), "  residual=%.3e  %s=%.3e", r.residual,
                  exceeds ? "threshold" : "tolerance", r.tolerance);
    os << buf << "\n";
  }
  os << npass << "/" << results_.size() << " checks passed\n";
  return os.str();
}

void write_file_atomic(const std::string& path, const std::string& contents) {
  namespace fs = std::filesystem;
  fs::path p(path);
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  fs::path tmp = p;
  tmp += ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("cannot write " + tmp.string());
    os << contents;
  }
  fs::rename(tmp, p);
}

std::string read_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot read " + path);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

}  // namespace cdw
