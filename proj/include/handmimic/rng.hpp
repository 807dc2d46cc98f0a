#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "handmimic/math.hpp"

namespace handmimic {

// Deterministic random stream. std::normal_distribution and friends are
// implementation-defined, so uniform and normal draws are spelled out here to
// keep trajectories bit-reproducible for a given seed.
class RngStream {
 public:
  explicit RngStream(uint64_t seed = 0) : engine_(seed), seed_hash_(seed) {}

  uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1) with 53-bit resolution.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Integer in [0, n).
  uint64_t uniform_index(uint64_t n) {
    // Rejection sampling keeps the draw unbiased.
    const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t x = engine_();
    while (x >= limit) x = engine_();
    return x % n;
  }

  // Standard normal via Box-Muller; caches the second deviate.
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * kPi * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
  }

  double normal(double mean, double stddev) { return mean + stddev * normal(); }

  Vec3 normal_vec3(double stddev) { return Vec3(normal() * stddev, normal() * stddev, normal() * stddev); }

  // Fisher-Yates; std::shuffle's draw sequence is not pinned by the standard.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      const size_t j = static_cast<size_t>(uniform_index(i));
      std::swap(v[i - 1], v[j]);
    }
  }

  // Derive an independent stream, e.g. one per rollout worker or sequence.
  RngStream spawn(uint64_t salt) const {
    std::seed_seq seq{static_cast<uint32_t>(seed_hash_ & 0xffffffffu),
                      static_cast<uint32_t>(seed_hash_ >> 32),
                      static_cast<uint32_t>(salt & 0xffffffffu),
                      static_cast<uint32_t>(salt >> 32)};
    std::vector<uint32_t> out(2);
    seq.generate(out.begin(), out.end());
    return RngStream((static_cast<uint64_t>(out[0]) << 32) | out[1]);
  }

  void reseed(uint64_t seed) {
    engine_.seed(seed);
    seed_hash_ = seed;
    has_spare_ = false;
  }

 private:
  std::mt19937_64 engine_;
  uint64_t seed_hash_{0};
  double spare_{0.0};
  bool has_spare_{false};
};

}  // namespace handmimic
