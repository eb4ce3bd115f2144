#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "cablejones/jones.hpp"
#include "cablejones/laurent.hpp"

namespace cablejones {

/// Read or write failure on a cache file; the message starts with the path.
class CacheError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact polynomials stored one per file in the laurent JSON format.
class PolyCache {
 public:
  explicit PolyCache(std::filesystem::path dir);

  struct Lookup {
    LaurentPoly poly;
    bool hit = false;
    std::filesystem::path path;
  };

  /// cable_N{N}_b{b}.json
  static std::string cable_file(const CableSpec& spec);
  /// fig8_N{m}.json
  static std::string fig8_file(int m);

  Lookup cable(const CableSpec& spec, const CablePolyOptions& options = {}) const;
  Lookup fig8(int m) const;

  static LaurentPoly load(const std::filesystem::path& path);
  static void store(const std::filesystem::path& path, const LaurentPoly& poly);

  const std::filesystem::path& dir() const { return dir_; }

 private:
  template <typename Compute>
  Lookup get_or_compute(const std::string& name, Compute&& compute) const;

  std::filesystem::path dir_;
};

}  // namespace cablejones
