#pragma once

// Platform-stable random helpers. std::mt19937_64 output is fully specified
// by the standard, but the std distributions and std::shuffle are not, so
// reports built from these stay byte-identical across standard libraries.

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace rainbow {

using Rng = std::mt19937_64;

/// Independent stream for (seed, stream) pairs.
inline Rng make_stream(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream),
                    static_cast<std::uint32_t>(stream >> 32)};
  return Rng(seq);
}

/// Uniform in [0, n), n > 0, by rejection.
inline std::uint64_t uniform_index(Rng &rng, std::uint64_t n) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform_unit(Rng &rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline bool bernoulli(Rng &rng, double p) { return uniform_unit(rng) < p; }

template <typename T> void shuffle(std::vector<T> &v, Rng &rng) {
  for (std::size_t i = v.size(); i > 1; --i)
    std::swap(v[i - 1], v[uniform_index(rng, i)]);
}

} // namespace rainbow
