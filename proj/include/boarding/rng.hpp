#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace boarding {

// Reproducibility contract: every random decision in this library goes
// through RandomStream below. The generator and the bounded-sampling scheme
// are pinned here so that a (seed, stream) pair yields identical results on
// every platform. std::uniform_int_distribution is implementation-defined
// and therefore not used.

inline std::uint64_t splitmix64_next(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// xoshiro256** engine, state expanded from a 64-bit seed via splitmix64.
class Xoshiro256StarStar {
 public:
  using result_type = std::uint64_t;

  explicit Xoshiro256StarStar(std::uint64_t seed) {
    std::uint64_t s = seed;
    for (auto& word : state_) word = splitmix64_next(s);
  }

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }

  result_type operator()() {
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

 private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::array<std::uint64_t, 4> state_;
};

/// A seeded random stream. Streams derived from the same seed but different
/// stream indices are independent, so trials can fan out across workers and
/// stay bit-reproducible regardless of thread count.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed, std::uint64_t stream = 0)
      : engine_(derive_seed(seed, stream)) {}

  std::uint64_t next() { return engine_(); }

  /// Unbiased integer in [0, bound) via Lemire's multiply-reject method.
  std::uint64_t uniform_below(std::uint64_t bound) {
    std::uint64_t x = engine_();
    __uint128_t m = static_cast<__uint128_t>(x) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
      const std::uint64_t threshold = (0 - bound) % bound;
      while (low < threshold) {
        x = engine_();
        m = static_cast<__uint128_t>(x) * bound;
        low = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  /// Generator identity recorded in simulation output metadata.
  static std::string generator_id() {
    return "xoshiro256** (splitmix64 seed expansion, per-stream derivation, "
           "Lemire bounded sampling)";
  }

 private:
  static std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t a = seed;
    std::uint64_t b = stream;
    return splitmix64_next(a) ^ splitmix64_next(b);
  }

  Xoshiro256StarStar engine_;
};

}  // namespace boarding
