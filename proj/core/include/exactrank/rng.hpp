#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>

namespace exactrank {

// Deterministic random streams. Everything downstream (instance generation,
// oracle sampling, tie breaks) draws from an rng_stream, and streams are
// derived from a 64-bit master seed plus an integer path, so identical seeds
// replay bit-for-bit on any platform and any worker-thread count. The std
// <random> distributions are deliberately not used: their outputs are not
// pinned by the standard.

/// SplitMix64 finalizer. Used both as a standalone seed expander and as the
/// mixing function for stream derivation.
inline std::uint64_t splitmix64(std::uint64_t& state) noexcept {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// xoshiro256** seeded via SplitMix64.
class rng_stream {
public:
  explicit rng_stream(std::uint64_t seed) noexcept {
    std::uint64_t s = seed;
    for (auto& word : state_) word = splitmix64(s);
    // All-zero state is the one fixed point of xoshiro; nudge away from it.
    if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) state_[0] = 1;
  }

  std::uint64_t next_u64() noexcept {
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

  /// Uniform double in [0, 1), 53 random bits.
  double next_double() noexcept {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform integer in [0, bound). Rejection sampling, unbiased.
  std::uint64_t next_below(std::uint64_t bound) noexcept {
    // Lemire-style threshold rejection on the low 64 bits.
    const std::uint64_t threshold = -bound % bound;
    for (;;) {
      const std::uint64_t r = next_u64();
      if (r >= threshold) return r % bound;
    }
  }

  bool bernoulli(double p) noexcept { return next_double() < p; }

  double uniform(double lo, double hi) noexcept {
    return lo + (hi - lo) * next_double();
  }

private:
  static std::uint64_t rotl(std::uint64_t x, int k) noexcept {
    return (x << k) | (x >> (64 - k));
  }

  std::array<std::uint64_t, 4> state_;
};

/// Stream-derivation path tags. Kept stable: they are part of the
/// reproducibility contract (reports quote seeds, not states).
enum class rng_phase : std::uint64_t {
  instance = 1,  // instance generation for a benchmark point or `generate`
  trial = 2,     // per-trial oracle randomness and tie breaks
  rank = 3,      // the CLI `rank` subcommand's single run
};

/// Derives an independent stream from (master_seed, path...). The derivation
/// chains the SplitMix64 finalizer over the path words, so any change in any
/// coordinate yields an unrelated stream. This function is the documented
/// seed->stream map; changing it invalidates recorded seeds.
inline rng_stream derive_stream(std::uint64_t master_seed,
                                std::initializer_list<std::uint64_t> path) {
  std::uint64_t acc = master_seed;
  std::uint64_t mixed = splitmix64(acc);
  for (std::uint64_t word : path) {
    acc = mixed ^ word;
    mixed = splitmix64(acc);
  }
  return rng_stream(mixed);
}

inline rng_stream derive_stream(std::uint64_t master_seed, rng_phase phase,
                                std::initializer_list<std::uint64_t> path) {
  std::uint64_t acc = master_seed;
  std::uint64_t mixed = splitmix64(acc);
  acc = mixed ^ static_cast<std::uint64_t>(phase);
  mixed = splitmix64(acc);
  for (std::uint64_t word : path) {
    acc = mixed ^ word;
    mixed = splitmix64(acc);
  }
  return rng_stream(mixed);
}

}  // namespace exactrank
