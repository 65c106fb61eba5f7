#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace hawkes {

// xoshiro256++ with splitmix64 seeding. Self-contained so that streams are
// bit-reproducible across standard libraries; per-path streams are derived
// from (master seed, path index) by counter-based mixing, which keeps
// parallel Monte Carlo independent of thread scheduling.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& word : state_) word = splitmix64(sm);
  }

  static Rng for_path(std::uint64_t master_seed, std::uint64_t path_index) {
    std::uint64_t sm = master_seed;
    const std::uint64_t master_mix = splitmix64(sm);
    // Distinct path indices give distinct, well-separated seed words.
    return Rng(master_mix ^ (0x9E3779B97F4A7C15ULL * (path_index + 1)));
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Uniform on [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Exponential with mean 1.
  double exponential() { return -std::log1p(-uniform01()); }

  // Standard normal via Box-Muller; consumes two uniforms per draw so the
  // stream position never depends on cached state.
  double normal() {
    double u1 = uniform01();
    while (u1 <= 0.0) u1 = uniform01();
    const double u2 = uniform01();
    const double two_pi = 6.283185307179586476925286766559;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

  static std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::array<std::uint64_t, 4> state_{};
};

}  // namespace hawkes
