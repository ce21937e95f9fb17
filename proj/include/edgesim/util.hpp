#pragma once

#include <charconv>
#include <cstdint>
#include <string>

namespace edgesim {

/// Shortest round-trip decimal form, '.' separator, locale independent.
inline std::string format_double(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

/// FNV-1a running hash; used for trace fingerprints.
struct Fnv64 {
  std::uint64_t state = 0xcbf29ce484222325ULL;

  void feed_bytes(const void* data, std::size_t n) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < n; ++i) {
      state ^= p[i];
      state *= 0x100000001b3ULL;
    }
  }
  void feed(std::uint64_t v) { feed_bytes(&v, sizeof v); }
  void feed(std::int64_t v) { feed_bytes(&v, sizeof v); }
  void feed(double v) { feed_bytes(&v, sizeof v); }
  void feed(int v) { feed_bytes(&v, sizeof v); }
};

}  // namespace edgesim
