#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>

namespace ocqst {

// splitmix64 output mixer (Sebastiano Vigna, public domain).
constexpr std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// FNV-1a over the bytes of a string, used for tag hashing.
constexpr std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : bytes) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Deterministic pseudo-random stream (xoshiro256**, Blackman & Vigna,
// public domain).  All simulation randomness flows through this type so
// results are reproducible independent of the standard library.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) {
    // Seed expansion via splitmix64, the expansion recommended by the
    // xoshiro authors.
    std::uint64_t sm = seed;
    for (auto& word : state_) word = splitmix64(sm);
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Uniform double in [0, 1), 53-bit resolution.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform double in (0, 1]; safe as a log() argument.
  double uniform_open() {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
  }

  // Unbiased integer in [0, n), n >= 1 (Lemire's multiply-shift rejection).
  std::uint64_t uniform_below(std::uint64_t n) {
    std::uint64_t x = next_u64();
    __uint128_t m = static_cast<__uint128_t>(x) * n;
    auto low = static_cast<std::uint64_t>(m);
    if (low < n) {
      const std::uint64_t threshold = (0 - n) % n;
      while (low < threshold) {
        x = next_u64();
        m = static_cast<__uint128_t>(x) * n;
        low = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  // Standard normal via Box-Muller; consumes exactly two uniforms.
  double normal() {
    const double u1 = uniform_open();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * 3.14159265358979323846 * u2);
  }

  // Exact Poisson(lambda) by summing exponential inter-arrival times.
  // Linear in lambda; harness rates stay below a few hundred thousand per
  // basis, so this is irrelevant next to the estimation step.
  std::int64_t poisson(double lambda) {
    if (!(lambda > 0.0)) return 0;
    std::int64_t count = 0;
    double elapsed = -std::log(uniform_open());
    while (elapsed <= lambda) {
      ++count;
      elapsed += -std::log(uniform_open());
    }
    return count;
  }

 private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::uint64_t state_[4]{};
};

// Collision-resistant seed for an independent sub-stream.  The derivation
// is pinned so other implementations can reproduce the stream family:
//   h0 = splitmix64_next(master_seed)
//   h1 = splitmix64_next(h0 XOR fnv1a64(tag))
//   h2 = splitmix64_next(h1 XOR trial)
// where splitmix64_next(s) advances the splitmix64 state s once and
// returns the mixed output.  h2 seeds RngStream.
inline std::uint64_t derive_seed(std::uint64_t master_seed,
                                 std::string_view tag, std::uint64_t trial) {
  std::uint64_t s = master_seed;
  std::uint64_t h = splitmix64(s);
  s = h ^ fnv1a64(tag);
  h = splitmix64(s);
  s = h ^ trial;
  return splitmix64(s);
}

inline RngStream derive_stream(std::uint64_t master_seed, std::string_view tag,
                               std::uint64_t trial) {
  return RngStream(derive_seed(master_seed, tag, trial));
}

}  // namespace ocqst
