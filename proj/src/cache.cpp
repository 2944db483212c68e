#include "cdw/cache.hpp"

#include <bit>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace cdw {

using nlohmann::json;

namespace {

static_assert(std::endian::native == std::endian::little, "cache payload is little-endian");

constexpr char kMagic[4] = {'C', 'D', 'W', 'C'};

struct NamedOp {
  std::string name;
  const LinOp* op;
};

std::vector<NamedOp> enumerate(const GeneratorSet& g) {
  std::vector<NamedOp> ops;
  for (int mu = 0; mu < 4; ++mu) {
    ops.push_back({"P" + std::to_string(mu), &g.P[mu]});
    ops.push_back({"K" + std::to_string(mu), &g.K[mu]});
  }
  ops.push_back({"D", &g.D});
  ops.push_back({"Q", &g.Q});
  ops.push_back({"C", &g.C});
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) ops.push_back({"M" + std::to_string(a) + std::to_string(b), &g.M[a][b]});
  return ops;
}

void put_matrix(std::string& out, const MatrixC& m) {
  for (Eigen::Index c = 0; c < m.cols(); ++c)
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      const double re = static_cast<double>(m(r, c).real());
      const double im = static_cast<double>(m(r, c).imag());
      out.append(reinterpret_cast<const char*>(&re), 8);
      out.append(reinterpret_cast<const char*>(&im), 8);
    }
}

MatrixC get_matrix(const std::string& in, size_t& pos, int rows, int cols) {
  MatrixC m(rows, cols);
  for (int c = 0; c < cols; ++c)
    for (int r = 0; r < rows; ++r) {
      double re, im;
      std::memcpy(&re, in.data() + pos, 8);
      std::memcpy(&im, in.data() + pos + 8, 8);
      pos += 16;
      m(r, c) = Complex(re, im);
    }
  return m;
}

}  // namespace

std::string OperatorCache::key_for(int l_max, int n, double omega_min, double omega_max) const {
  std::ostringstream os;
  os.precision(17);
  os << "L" << l_max << "_N" << n << "_" << omega_min << "_" << omega_max;
  return os.str();
}

std::string OperatorCache::path_for(const std::string& key) const {
  return root_ + "/ops_" + key + ".cdwc";
}

void OperatorCache::store(const std::string& key, const GeneratorSet& g, const ScalarSpace& space) const {
  json header;
  header["version"] = kCacheFormatVersion;
  header["convention"] = kConventionTag;
  header["dtype"] = "complex128-le";
  header["L_max"] = space.l_max();
  header["N"] = space.n_radial();
  header["key"] = key;
  json index = json::array();

  std::string payload;
  for (const auto& [name, op] : enumerate(g)) {
    for (const auto& [bk, terms] : op->blocks()) {
      for (const auto& t : terms) {
        json e;
        e["op"] = name;
        e["cs_out"] = bk.cs_out;
        e["l_out"] = bk.l_out;
        e["cs_in"] = bk.cs_in;
        e["l_in"] = bk.l_in;
        e["ang_rows"] = t.ang.rows();
        e["ang_cols"] = t.ang.cols();
        e["rad_n"] = t.rad.rows();
        e["offset"] = payload.size();
        index.push_back(e);
        put_matrix(payload, t.ang);
        put_matrix(payload, t.rad);
      }
    }
  }
  header["blocks"] = index;
  const std::string hs = header.dump();

  std::string out;
  out.append(kMagic, 4);
  const std::uint32_t ver = kCacheFormatVersion;
  out.append(reinterpret_cast<const char*>(&ver), 4);
  const std::uint64_t hlen = hs.size();
  out.append(reinterpret_cast<const char*>(&hlen), 8);
  out += hs;
  out += payload;

  namespace fs = std::filesystem;
  fs::create_directories(root_);
  const std::string path = path_for(key);
  const std::string tmp = path + ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    os << out;
  }
  fs::rename(tmp, path);
}

std::optional<GeneratorSet> OperatorCache::load(const std::string& key, const ScalarSpace& space) const {
  const std::string path = path_for(key);
  std::ifstream is(path, std::ios::binary);
  if (!is) return std::nullopt;
  std::ostringstream buf;
  buf << is.rdbuf();
  const std::string data = buf.str();
  if (data.size() < 16 || std::memcmp(data.data(), kMagic, 4) != 0)
    throw CacheVersionError("cache: bad magic in " + path);
  std::uint32_t ver;
  std::memcpy(&ver, data.data() + 4, 4);
  if (ver != kCacheFormatVersion)
    throw CacheVersionError("cache: format version mismatch in " + path);
  std::uint64_t hlen;
  std::memcpy(&hlen, data.data() + 8, 8);
  json header = json::parse(data.substr(16, hlen));
  if (header["convention"].get<std::string>() != kConventionTag)
    throw CacheVersionError("cache: convention tag mismatch in " + path);
  if (header["L_max"].get<int>() != space.l_max() || header["N"].get<int>() != space.n_radial())
    throw CacheVersionError("cache: dimensions mismatch in " + path);

  const size_t base = 16 + hlen;
  GeneratorSet g;
  auto ops = enumerate(g);
  std::map<std::string, LinOp*> by_name;
  GeneratorSet out;
  // enumerate() returned pointers into a temporary copy; rebuild over `out`
  std::vector<std::pair<std::string, LinOp*>> slots;
  for (int mu = 0; mu < 4; ++mu) {
    slots.push_back({"P" + std::to_string(mu), &out.P[mu]});
    slots.push_back({"K" + std::to_string(mu), &out.K[mu]});
  }
  slots.push_back({"D", &out.D});
  slots.push_back({"Q", &out.Q});
  slots.push_back({"C", &out.C});
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) slots.push_back({"M" + std::to_string(a) + std::to_string(b), &out.M[a][b]});
  for (auto& [name, op] : slots) by_name[name] = op;

  for (const auto& e : header["blocks"]) {
    const std::string name = e["op"].get<std::string>();
    auto it = by_name.find(name);
    if (it == by_name.end()) throw CacheVersionError("cache: unknown operator " + name);
    size_t pos = base + e["offset"].get<size_t>();
    const int ar = e["ang_rows"].get<int>(), ac = e["ang_cols"].get<int>(), n = e["rad_n"].get<int>();
    MatrixC ang = get_matrix(data, pos, ar, ac);
    MatrixC rad = get_matrix(data, pos, n, n);
    it->second->add_term({e["cs_out"].get<int>(), e["l_out"].get<int>(), e["cs_in"].get<int>(), e["l_in"].get<int>()},
                         std::move(ang), std::move(rad));
  }
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) out.M[b][a] = out.M[a][b].scaled(Real(-1));
  return out;
}

}  // namespace cdw
