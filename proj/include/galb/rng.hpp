#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace galb {

// One SplitMix64 step. Used to fan a master seed out into per-run and
// per-purpose seeds; the derivation chain is part of the output contract
// (see README "Reproducibility").
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  std::uint64_t z = base + (index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Deterministic random source: std::mt19937_64 plus hand-rolled range
// mapping. std::uniform_int_distribution and std::shuffle are
// implementation-defined, so every draw that feeds results goes through
// this class to keep sequences identical across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform integer in [lo, hi], both inclusive. Unbiased (rejection on
  // the 2^64 remainder).
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t reject_below = (0 - span) % span;
    for (;;) {
      const std::uint64_t x = next_u64();
      if (x >= reject_below) {
        return lo + static_cast<std::int64_t>(x % span);
      }
    }
  }

  // Uniform double in [0, 1), top 53 bits of one draw.
  double uniform01() { return (next_u64() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

// Fisher-Yates with draws from Rng.
template <typename T>
void shuffle(std::vector<T>& values, Rng& rng) {
  for (std::size_t i = values.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(i) - 1));
    std::swap(values[i - 1], values[j]);
  }
}

}  // namespace galb
