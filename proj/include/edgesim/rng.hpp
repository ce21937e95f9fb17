#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace edgesim {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Seed for the id-th substream of a master seed. Substreams are independent
/// of each other, so adding a stream never perturbs another stream's draws.
inline std::uint64_t substream_seed(std::uint64_t master, std::uint64_t id) {
  std::uint64_t s = master;
  std::uint64_t a = splitmix64(s);
  s = master ^ (0x6a09e667f3bcc909ULL + id * 0x9e3779b97f4a7c15ULL);
  std::uint64_t b = splitmix64(s);
  return a ^ (b + id);
}

/// Deterministic random stream. mt19937_64 is bit-specified by the standard
/// and the variate transforms below are hand-rolled, so a given seed yields
/// the same draws on every platform and standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  /// Uniform on [0, 1), 53-bit resolution.
  double uniform01() {
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform01();
  }

  /// Exponential with the given rate (mean 1/rate).
  double exponential(double rate) {
    return -std::log1p(-uniform01()) / rate;
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace edgesim
