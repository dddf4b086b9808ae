#ifndef FROBSPLIT_GB_CACHE_HPP
#define FROBSPLIT_GB_CACHE_HPP

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "frobsplit/ideal.hpp"
#include "frobsplit/parse.hpp"
#include "frobsplit/polynomial.hpp"
#include "frobsplit/ring.hpp"

namespace frobsplit {

namespace detail {

inline uint64_t fnv1a64(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::string hex64(uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[static_cast<size_t>(i)] = digits[v & 0xf];
    v >>= 4;
  }
  return s;
}

}  // namespace detail

// Basis computations are keyed by the full problem content: ring spec plus
// the canonical generator strings (generators are kept sorted by ideal_make).
inline std::string gb_cache_key(const Ring& r, const std::vector<Polynomial>& gens) {
  std::string blob = ring_spec_to_string(r);
  for (const auto& g : gens) {
    blob += poly_to_string(g);
    blob += '\n';
  }
  return detail::hex64(detail::fnv1a64(blob));
}

class FileGbCache : public GbCacheHook {
 public:
  explicit FileGbCache(std::string dir) : dir_(std::move(dir)) {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
  }

  std::optional<std::vector<Polynomial>> load(const Ring& r,
                                              const std::vector<Polynomial>& gens) override {
    std::ifstream in(path_for(r, gens));
    if (!in) return std::nullopt;
    std::stringstream ss;
    ss << in.rdbuf();
    std::string text = ss.str();
    // header: the ring spec's three lines, then one basis element per line
    size_t pos = 0;
    for (int i = 0; i < 3; ++i) {
      size_t nl = text.find('\n', pos);
      if (nl == std::string::npos) return std::nullopt;
      pos = nl + 1;
    }
    Ring stored;
    try {
      stored = parse_ring_spec(text.substr(0, pos));
    } catch (const AlgebraError&) {
      return std::nullopt;
    }
    if (!same_ring(stored, r)) return std::nullopt;
    std::vector<Polynomial> gb;
    while (pos < text.size()) {
      size_t nl = text.find('\n', pos);
      std::string line = text.substr(pos, nl == std::string::npos ? nl : nl - pos);
      pos = nl == std::string::npos ? text.size() : nl + 1;
      if (line.empty()) continue;
      try {
        gb.push_back(parse_poly(line, r));
      } catch (const AlgebraError&) {
        return std::nullopt;  // treat a damaged entry as a miss
      }
    }
    if (gb.empty()) return std::nullopt;
    return gb;
  }

  void store(const Ring& r, const std::vector<Polynomial>& gens,
             const std::vector<Polynomial>& gb) override {
    std::string tmp = path_for(r, gens) + ".tmp";
    {
      std::ofstream out(tmp, std::ios::trunc);
      if (!out) return;
      out << ring_spec_to_string(r);
      for (const auto& g : gb) out << poly_to_string(g) << '\n';
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path_for(r, gens), ec);
    if (ec) std::filesystem::remove(tmp, ec);
  }

  const std::string& dir() const { return dir_; }

 private:
  std::string path_for(const Ring& r, const std::vector<Polynomial>& gens) const {
    return dir_ + "/" + gb_cache_key(r, gens) + ".gb";
  }

  std::string dir_;
};

// Scoped installation of the cache into the thread-local hook slot.
class GbCacheScope {
 public:
  explicit GbCacheScope(std::string dir) : cache_(std::move(dir)), prev_(gb_cache_hook()) {
    gb_cache_hook() = &cache_;
  }
  ~GbCacheScope() { gb_cache_hook() = prev_; }
  GbCacheScope(const GbCacheScope&) = delete;
  GbCacheScope& operator=(const GbCacheScope&) = delete;

 private:
  FileGbCache cache_;
  GbCacheHook* prev_;
};

}  // namespace frobsplit

#endif
