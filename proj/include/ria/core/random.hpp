#pragma once

#include <cstdint>
#include <random>

namespace ria {

using Rng = std::mt19937_64;

// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Counter-based seed derivation: the seed of child `index` on `stream` is a
// pure function of (parent, stream, index). Trials use stream 0 with the
// trial number as index; a single game splits its seed into the streams below.
constexpr std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t stream,
                                    std::uint64_t index) noexcept {
  return mix64(mix64(parent ^ mix64(stream + 0x5851f42d4c957f2dULL)) + index);
}

enum class Stream : std::uint64_t {
  kTrial = 0,
  kInfusion = 1,
  kBuffer = 2,
  kOracle = 3,
};

inline Rng make_rng(std::uint64_t parent, Stream stream, std::uint64_t index = 0) {
  return Rng{derive_seed(parent, static_cast<std::uint64_t>(stream), index)};
}

// Uniform double in [0, 1) from the top 53 bits; never returns 1.
inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline bool bernoulli(Rng& rng, double p) { return uniform01(rng) < p; }

}  // namespace ria
