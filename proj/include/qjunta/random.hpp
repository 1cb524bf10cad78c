#pragma once

#include <cstdint>
#include <random>

namespace qjunta {

/// The random source threaded through every randomized operation.
using RandomStream = std::mt19937_64;

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Seed of stream `index` under `master_seed`. Independent of evaluation
/// order, so trials can run in any order or concurrently.
constexpr std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t index) noexcept {
  return mix64(mix64(master_seed) ^ mix64(index + 0x632be59bd9b4e019ULL));
}

inline RandomStream make_stream(std::uint64_t master_seed, std::uint64_t index) {
  return RandomStream(derive_seed(master_seed, index));
}

/// A uniformly random submask of `mask` (one fair coin per member).
inline std::uint32_t random_submask(RandomStream& rng, std::uint32_t mask) {
  return static_cast<std::uint32_t>(rng()) & mask;
}

}  // namespace qjunta
