#include "aksch/cache.hpp"

#include <fstream>
#include <sstream>
#include <system_error>
#include <unistd.h>

#include "aksch/errors.hpp"
#include "aksch/serialize.hpp"
#include "aksch/tableaux.hpp"

namespace aksch {

namespace {

std::string cache_key(int n, int r, const std::vector<int>& m) {
  std::ostringstream os;
  os << "n=" << n << ";r=" << r << ";m=";
  for (std::size_t i = 0; i < m.size(); ++i) os << (i ? "," : "") << m[i];
  os << ";v" << kCacheSchema;
  return os.str();
}

// Anything unexpected reads as an empty cache.
json load(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) return json::object();
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded() || !j.is_object() || j.value("schema", -1) != kCacheSchema ||
      !j.contains("entries") || !j["entries"].is_object())
    return json::object();
  return j;
}

std::optional<std::vector<ShapeCounts>> decode(const json& entry) {
  try {
    std::vector<ShapeCounts> out;
    for (const auto& e : entry) {
      ShapeCounts c;
      c.shape = multipartition_from_json(e.at("shape"));
      c.standard = e.at("standard").get<std::uint64_t>();
      c.semistandard = e.at("semistandard").get<std::uint64_t>();
      out.push_back(std::move(c));
    }
    return out;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace

EnumerationCache::EnumerationCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::optional<std::vector<ShapeCounts>> EnumerationCache::lookup(int n, int r, const std::vector<int>& m) const {
  const json j = load(file());
  if (j.empty()) return std::nullopt;
  const auto it = j["entries"].find(cache_key(n, r, m));
  if (it == j["entries"].end()) return std::nullopt;
  auto decoded = decode(*it);
  // a stale entry must still describe the current enumeration
  if (decoded) {
    const auto shapes = enumerate_multipartitions(n, r);
    if (decoded->size() != shapes.size()) return std::nullopt;
    for (std::size_t i = 0; i < shapes.size(); ++i)
      if ((*decoded)[i].shape != shapes[i]) return std::nullopt;
  }
  return decoded;
}

void EnumerationCache::store(int n, int r, const std::vector<int>& m, const std::vector<ShapeCounts>& counts) const {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) throw IoError("cannot create cache directory " + dir_.string() + ": " + ec.message());
  json j = load(file());
  if (j.empty()) j = {{"schema", kCacheSchema}, {"entries", json::object()}};
  json entry = json::array();
  for (const auto& c : counts)
    entry.push_back({{"shape", to_json(c.shape)}, {"standard", c.standard}, {"semistandard", c.semistandard}});
  j["entries"][cache_key(n, r, m)] = entry;

  const auto tmp = dir_ / (file().filename().string() + ".tmp." + std::to_string(::getpid()));
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw IoError("cannot write cache file " + tmp.string());
    out << j.dump() << '\n';
    if (!out.flush()) throw IoError("cannot write cache file " + tmp.string());
  }
  std::filesystem::rename(tmp, file(), ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw IoError("cannot replace cache file " + file().string());
  }
}

std::vector<ShapeCounts> shape_counts(int n, int r, const std::vector<int>& m) {
  std::vector<ShapeCounts> out;
  for (auto& lambda : enumerate_multipartitions(n, r)) {
    ShapeCounts c;
    c.standard = count_standard(lambda);
    c.semistandard = count_semistandard(lambda, m);
    c.shape = std::move(lambda);
    out.push_back(std::move(c));
  }
  return out;
}

DimsResult compute_dims(int n, int r, std::vector<int> m, const EnumerationCache* cache) {
  if (n < 0) throw InvalidArgument("n must be non-negative");
  if (r < 1) throw InvalidArgument("r must be at least 1");
  if (m.empty()) m = default_bounds(n, r);
  if (static_cast<int>(m.size()) != r) throw InvalidArgument("m must have r entries");
  for (int v : m)
    if (v < 1) throw InvalidArgument("length bounds m_k must be positive");

  DimsResult res;
  res.n = n;
  res.r = r;
  res.m = m;
  if (cache) {
    if (auto hit = cache->lookup(n, r, m)) {
      res.shapes = std::move(*hit);
      res.cache_hit = true;
    }
  }
  if (!res.cache_hit) {
    res.shapes = shape_counts(n, r, m);
    if (cache) cache->store(n, r, m, res.shapes);
  }
  for (const auto& c : res.shapes) {
    res.dim_hecke += c.standard * c.standard;
    res.dim_schur += c.semistandard * c.semistandard;
  }
  return res;
}

}  // namespace aksch
