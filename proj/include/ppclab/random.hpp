#pragma once

// Counter-based uniform source. U(seed, n, i) is a pure function of its
// arguments: no stream state, no evaluation-order dependence. Any element of
// any run can be reproduced from (seed, element index, coordinate index)
// alone, which is what makes perturbation experiments bit-reproducible and
// trivially parallel.

#include <cstdint>

namespace ppclab {

namespace detail {

// SplitMix64 finalizer; bijective with full avalanche.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ULL;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return z;
}

}  // namespace detail

class RandomSource {
 public:
  explicit constexpr RandomSource(std::uint64_t seed) : seed_(seed) {}

  constexpr std::uint64_t seed() const { return seed_; }

  // 64 uniform bits for element n, coordinate i. Three chained finalizer
  // rounds; each stage is bijective in its new input, so distinct (n, i)
  // addresses decorrelate fully.
  constexpr std::uint64_t bits(std::uint64_t n, std::uint32_t i) const {
    std::uint64_t h = detail::mix64(seed_ ^ 0x243F6A8885A308D3ULL);
    h = detail::mix64(h ^ (n + 0x9E3779B97F4A7C15ULL));
    h = detail::mix64(h ^ (static_cast<std::uint64_t>(i) + 0xD1B54A32D192ED03ULL));
    return h;
  }

  // Uniform double in [0, 1) with 53 random bits.
  constexpr double uniform(std::uint64_t n, std::uint32_t i) const {
    return static_cast<double>(bits(n, i) >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t seed_;
};

inline double uniform_value(const RandomSource& src, std::uint64_t n,
                            std::uint32_t i) {
  return src.uniform(n, i);
}

}  // namespace ppclab
