#include "cablejones/harness/poly_cache.hpp"

#include <fstream>
#include <sstream>
#include <utility>

namespace cablejones {

PolyCache::PolyCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::string PolyCache::cable_file(const CableSpec& spec) {
  return "cable_N" + std::to_string(spec.N) + "_b" + std::to_string(spec.b) + ".json";
}

std::string PolyCache::fig8_file(int m) { return "fig8_N" + std::to_string(m) + ".json"; }

LaurentPoly PolyCache::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw CacheError(path.string() + ": cannot open for reading");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return from_json(buf.str());
  } catch (const std::invalid_argument& e) {
    throw CacheError(path.string() + ": " + e.what());
  }
}

void PolyCache::store(const std::filesystem::path& path, const LaurentPoly& poly) {
  std::error_code ec;
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) {
      throw CacheError(path.parent_path().string() + ": " + ec.message());
    }
  }
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw CacheError(tmp.string() + ": cannot open for writing");
    }
    out << to_json(poly) << '\n';
    if (!out) {
      throw CacheError(tmp.string() + ": write failed");
    }
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    throw CacheError(path.string() + ": " + ec.message());
  }
}

template <typename Compute>
PolyCache::Lookup PolyCache::get_or_compute(const std::string& name, Compute&& compute) const {
  Lookup out;
  out.path = dir_ / name;
  if (std::filesystem::exists(out.path)) {
    out.poly = load(out.path);
    out.hit = true;
    return out;
  }
  out.poly = compute();
  store(out.path, out.poly);
  return out;
}

PolyCache::Lookup PolyCache::cable(const CableSpec& spec, const CablePolyOptions& options) const {
  spec.validate();
  return get_or_compute(cable_file(spec), [&] { return cable_poly(spec, options); });
}

PolyCache::Lookup PolyCache::fig8(int m) const {
  return get_or_compute(fig8_file(m), [&] { return habiro_fig8_poly(m); });
}

}  // namespace cablejones
