#pragma once

#include <cmath>
#include <cstdint>

namespace canopy {

// All randomness in the project flows through these counter-based generators.
// A draw is a pure function of (key, counter), so parallel loops can pull
// noise for independent work items without sharing generator state, and the
// result does not depend on thread count or schedule.

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

/// Derives an independent stream key from a base seed and stream labels.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
  return splitmix64(splitmix64(splitmix64(seed) ^ a) ^ b);
}

/// Stateless generator indexed by a counter.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t key) : key_(splitmix64(key)) {}

  /// Uniform draw in (0, 1].
  double uniform(std::uint64_t counter) const {
    const std::uint64_t bits = splitmix64(key_ ^ splitmix64(counter + 0x632be59bd9b4e019ull));
    return static_cast<double>((bits >> 11) + 1) * 0x1.0p-53;
  }

  /// Standard normal draw (Box-Muller; one value per counter).
  double normal(std::uint64_t counter) const {
    const double u1 = uniform(2 * counter);
    const double u2 = uniform(2 * counter + 1);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
  }

 private:
  std::uint64_t key_;
};

/// Sequential convenience wrapper over CounterRng.
class SeqRng {
 public:
  explicit SeqRng(std::uint64_t key) : rng_(key) {}
  double uniform() { return rng_.uniform(next_++); }
  double normal() { return rng_.normal(next_++); }

 private:
  CounterRng rng_;
  std::uint64_t next_ = 0;
};

}  // namespace canopy
