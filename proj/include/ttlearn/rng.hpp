#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace ttlearn {

// Seed derivation for independent substreams (SplitMix64 chain). Streams
// derived from distinct tags are statistically independent.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t tag) {
  return splitmix64(master ^ splitmix64(tag));
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t t1,
                                 std::uint64_t t2) {
  return derive_seed(derive_seed(master, t1), t2);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t t1,
                                 std::uint64_t t2, std::uint64_t t3) {
  return derive_seed(derive_seed(master, t1, t2), t3);
}

// Seeded random stream. Conversions from raw bits are hand-rolled (uniform
// doubles, Box-Muller normals, masked-rejection integers) so that sampled
// values are fully determined by the seed and this code, not by the standard
// library's distribution internals.
class Rng {
 public:
  static constexpr const char* kVersion = "mt19937_64/box-muller/1";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on [0, 1).
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Standard normal via Box-Muller; one spare is cached per pair of draws.
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u1 = 1.0 - uniform();  // (0, 1], keeps the log finite
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * M_PI * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
  }

  // Uniform integer in [0, n) by masked rejection.
  std::uint64_t uniform_index(std::uint64_t n) {
    std::uint64_t mask = n - 1;
    mask |= mask >> 1;
    mask |= mask >> 2;
    mask |= mask >> 4;
    mask |= mask >> 8;
    mask |= mask >> 16;
    mask |= mask >> 32;
    while (true) {
      const std::uint64_t v = next_u64() & mask;
      if (v < n) {
        return v;
      }
    }
  }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace ttlearn
