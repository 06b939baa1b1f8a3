#pragma once

#include <cmath>
#include <cstdint>

// Counter-based pseudo-randomness. Everything downstream (graph sampling,
// trial seeding, color draws) goes through these two primitives so that a
// given (seed, index) pair produces the same value on every platform.

namespace pathlab {

// SplitMix64 finalizer (Stafford variant 13). Bijective on uint64_t.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Per-trial seed derivation: seed XOR trial index, then one mixing pass.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t trial) noexcept {
  return mix64(seed ^ mix64(trial));
}

// Map to [0, 1) with 53 bits of mantissa.
constexpr double to_unit(std::uint64_t x) noexcept {
  return static_cast<double>(x >> 11) * 0x1.0p-53;
}

// Sequential stream form of SplitMix64.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() noexcept { return mix64(state_++); }

  double next_unit() noexcept { return to_unit(next()); }

  // Uniform integer in [0, bound). Rejection-free 128-bit multiply would be
  // nicer but modulo keeps the stream layout obvious; bias is < bound/2^64.
  std::uint64_t next_below(std::uint64_t bound) noexcept {
    return next() % bound;
  }

  // Number of failures before the first success of a Bernoulli(p) sequence,
  // by inversion. Caller guarantees 0 < p < 1.
  std::uint64_t next_geometric(double p) noexcept {
    double u = next_unit();
    // log(0) guard: shift into (0, 1].
    if (u <= 0.0) u = 0x1.0p-53;
    return static_cast<std::uint64_t>(std::log(u) / std::log1p(-p));
  }

  // Fisher-Yates on a container of indexable values.
  template <class Vec>
  void shuffle(Vec& v) noexcept {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(next_below(i));
      auto tmp = v[i - 1];
      v[i - 1] = v[j];
      v[j] = tmp;
    }
  }

 private:
  std::uint64_t state_;
};

}  // namespace pathlab
