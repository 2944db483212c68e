#include "cdw/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cdw {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

double parse_double(const std::string& v, const std::string& key) {
  try {
    size_t pos = 0;
    double d = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return d;
  } catch (...) {
    throw std::invalid_argument("config: bad numeric value for " + key + ": '" + v + "'");
  }
}

long parse_int(const std::string& v, const std::string& key) {
  try {
    size_t pos = 0;
    long d = std::stol(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return d;
  } catch (...) {
    throw std::invalid_argument("config: bad integer value for " + key + ": '" + v + "'");
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

double* tol_slot(Tolerances& t, const std::string& name) {
  static const std::map<std::string, double Tolerances::*> kSlots = {
      {"bracket", &Tolerances::bracket},
      {"mob_bracket", &Tolerances::mob_bracket},
      {"so3_bracket", &Tolerances::so3_bracket},
      {"hermiticity", &Tolerances::hermiticity},
      {"casimir", &Tolerances::casimir},
      {"casimir_so3", &Tolerances::casimir_so3},
      {"mass_shell", &Tolerances::mass_shell},
      {"pct", &Tolerances::pct},
      {"l0_slack", &Tolerances::l0_slack},
      {"deformed_table", &Tolerances::deformed_table},
      {"deformed_pct", &Tolerances::deformed_pct},
      {"deformed_mass_shell", &Tolerances::deformed_mass_shell},
      {"field_eq", &Tolerances::field_eq},
      {"negative_control", &Tolerances::negative_control},
      {"maxwell_strong", &Tolerances::maxwell_strong},
      {"maxwell_weak_unitary", &Tolerances::maxwell_weak_unitary},
      {"maxwell_upku", &Tolerances::maxwell_upku},
      {"maxwell_tgrad", &Tolerances::maxwell_tgrad},
      {"maxwell_tvcv", &Tolerances::maxwell_tvcv},
      {"maxwell_adjoint", &Tolerances::maxwell_adjoint},
      {"maxwell_intertwine_weak", &Tolerances::maxwell_intertwine_weak},
      {"maxwell_psd", &Tolerances::maxwell_psd},
      {"maxwell_null_long", &Tolerances::maxwell_null_long},
      {"maxwell_null_curl", &Tolerances::maxwell_null_curl},
      {"maxwell_pimij", &Tolerances::maxwell_pimij},
      {"alpha_rel", &Tolerances::alpha_rel},
      {"alpha_profile", &Tolerances::alpha_profile},
      {"alpha_antisym", &Tolerances::alpha_antisym},
      {"mass_uell", &Tolerances::mass_uell},
      {"mass_uell_pointwise", &Tolerances::mass_uell_pointwise},
      {"mass_mass_shell", &Tolerances::mass_mass_shell},
      {"mass_md_mc", &Tolerances::mass_md_mc},
      {"mass_hermiticity", &Tolerances::mass_hermiticity},
      {"mass_p0_boost", &Tolerances::mass_p0_boost},
      {"mass_intermediate", &Tolerances::mass_intermediate},
      {"mass_closure", &Tolerances::mass_closure},
      {"mass_pauli_lubanski", &Tolerances::mass_pauli_lubanski},
      {"mass_chain", &Tolerances::mass_chain},
  };
  auto it = kSlots.find(name);
  if (it == kSlots.end()) return nullptr;
  return &(t.*(it->second));
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

void RunConfig::set(const std::string& key, const std::string& value) {
  if (key == "L_max") {
    l_max = static_cast<int>(parse_int(value, key));
  } else if (key == "N") {
    n_radial = static_cast<int>(parse_int(value, key));
  } else if (key == "omega_min") {
    omega_min = parse_double(value, key);
  } else if (key == "omega_max") {
    omega_max = parse_double(value, key);
  } else if (key == "seed") {
    seed = static_cast<std::uint64_t>(parse_int(value, key));
  } else if (key == "n_vectors") {
    n_vectors = static_cast<int>(parse_int(value, key));
  } else if (key == "delta_ell") {
    delta_ell = static_cast<int>(parse_int(value, key));
  } else if (key == "helicities") {
    helicities.clear();
    for (auto& tok : split(value, ',')) helicities.push_back(static_cast<int>(parse_int(tok, key)));
  } else if (key == "masses") {
    masses.clear();
    for (auto& triple : split(value, ';')) {
      auto parts = split(triple, ',');
      if (parts.size() != 3) throw std::invalid_argument("config: masses entries are m,mprime,delta; got '" + triple + "'");
      masses.push_back({parse_double(parts[0], key), parse_double(parts[1], key), parse_double(parts[2], key)});
    }
  } else if (key == "cache_dir") {
    cache_dir = value;
  } else if (key == "out") {
    out_path = value;
  } else if (key == "jobs") {
    jobs = static_cast<int>(parse_int(value, key));
  } else if (key.rfind("tol.", 0) == 0) {
    double* slot = tol_slot(tol, key.substr(4));
    if (!slot) throw std::invalid_argument("config: unknown tolerance '" + key + "'");
    *slot = parse_double(value, key);
  } else {
    throw std::invalid_argument("config: unknown key '" + key + "'");
  }
}

void RunConfig::validate() const {
  if (l_max < 2) throw std::invalid_argument("config: L_max must be >= 2");
  if (n_radial < 8) throw std::invalid_argument("config: N must be >= 8");
  if (!(omega_min > 0) || !(omega_min < omega_max))
    throw std::invalid_argument("config: require 0 < omega_min < omega_max");
  if (n_vectors < 1) throw std::invalid_argument("config: n_vectors must be positive");
  if (delta_ell < 1 || delta_ell > l_max) throw std::invalid_argument("config: delta_ell out of range");
  if (jobs < 1) throw std::invalid_argument("config: jobs must be positive");
  for (int h : helicities)
    if (h < 0 || h > l_max - 2) throw std::invalid_argument("config: helicity out of range (need h <= L_max-2)");
  for (const auto& mt : masses) {
    if (!(mt.m > 0) || mt.m_prime < 0 || !(mt.m_prime < mt.m))
      throw std::invalid_argument("config: masses require 0 <= m' < m");
    if (!(mt.delta > 0)) throw std::invalid_argument("config: mass delta must be positive");
    if (!(mt.m * (1 + mt.delta) < omega_max)) throw std::invalid_argument("config: mass grid would be empty");
  }
}

std::string RunConfig::canonical() const {
  std::map<std::string, std::string> kv;
  kv["L_max"] = std::to_string(l_max);
  kv["N"] = std::to_string(n_radial);
  kv["omega_min"] = fmt(omega_min);
  kv["omega_max"] = fmt(omega_max);
  kv["seed"] = std::to_string(seed);
  kv["n_vectors"] = std::to_string(n_vectors);
  kv["delta_ell"] = std::to_string(delta_ell);
  {
    std::string s;
    for (size_t i = 0; i < helicities.size(); ++i) s += (i ? "," : "") + std::to_string(helicities[i]);
    kv["helicities"] = s;
  }
  {
    std::string s;
    for (size_t i = 0; i < masses.size(); ++i) {
      if (i) s += ";";
      s += fmt(masses[i].m) + "," + fmt(masses[i].m_prime) + "," + fmt(masses[i].delta);
    }
    kv["masses"] = s;
  }
  Tolerances def;
  Tolerances cur = tol;
  for (const char* name :
       {"bracket", "mob_bracket", "so3_bracket", "hermiticity", "casimir", "casimir_so3", "mass_shell",
        "pct", "l0_slack", "deformed_table", "deformed_pct", "deformed_mass_shell", "field_eq",
        "negative_control", "maxwell_strong", "maxwell_weak_unitary", "maxwell_upku", "maxwell_tgrad",
        "maxwell_tvcv", "maxwell_adjoint", "maxwell_intertwine_weak", "maxwell_psd", "maxwell_null_long",
        "maxwell_null_curl", "maxwell_pimij", "alpha_rel", "alpha_profile", "alpha_antisym", "mass_uell",
        "mass_uell_pointwise", "mass_mass_shell", "mass_md_mc", "mass_hermiticity", "mass_p0_boost",
        "mass_intermediate", "mass_closure", "mass_pauli_lubanski", "mass_chain"}) {
    kv["tol." + std::string(name)] = fmt(*tol_slot(cur, name));
    (void)def;
  }
  std::string out;
  for (const auto& [k, v] : kv) out += k + " = " + v + "\n";
  return out;
}

std::string RunConfig::hash() const {
  const std::string c = canonical();
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : c) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::invalid_argument("config: cannot open " + path);
  RunConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const auto hash_pos = line.find('#');
    if (hash_pos != std::string::npos) line = line.substr(0, hash_pos);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config: line " + std::to_string(lineno) + " is not 'key = value'");
    cfg.set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return cfg;
}

void apply_overrides(RunConfig& cfg, const std::vector<std::string>& sets) {
  for (const auto& s : sets) {
    const auto eq = s.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("--set expects key=value, got '" + s + "'");
    std::string key = trim(s.substr(0, eq));
    std::string val = trim(s.substr(eq + 1));
    cfg.set(key, val);
  }
}

}  // namespace cdw
