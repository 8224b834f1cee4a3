#pragma once

#include <cstdint>

namespace irreps {

// Deterministic 64-bit generator (splitmix64). Seeded runs must reproduce
// bit-for-bit across platforms, which the std::<random> distributions do not
// guarantee, so all sampling goes through this class.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform on [0, 1) with 53 bits.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, bound), bias-free by rejection. bound >= 1.
  std::uint64_t uniform_below(std::uint64_t bound) {
    const std::uint64_t threshold = -bound % bound;
    for (;;) {
      std::uint64_t r = next_u64();
      if (r >= threshold) return r % bound;
    }
  }

  bool bernoulli(double p) { return uniform() < p; }

 private:
  std::uint64_t state_;
};

// Stream for shard `index` under a master seed. Streams for distinct indices
// are decorrelated by an extra mixing round.
inline Rng shard_rng(std::uint64_t master_seed, std::uint64_t index) {
  std::uint64_t z = master_seed + 0x632be59bd9b4e019ULL * (index + 1);
  z = (z ^ (z >> 29)) * 0xff51afd7ed558ccdULL;
  z = (z ^ (z >> 33)) * 0xc4ceb9fe1a85ec53ULL;
  return Rng(z ^ (z >> 32));
}

}  // namespace irreps
