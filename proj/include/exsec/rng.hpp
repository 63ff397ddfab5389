#pragma once

#include <cstdint>

namespace exsec {

// Counter-based uniform generator. Every (seed, day, shard) triple maps to
// one value independently of evaluation order, so simulations can be
// partitioned across workers and still reproduce bit-identical trajectories.

// splitmix64 finalizer step.
constexpr std::uint64_t mix_bits(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Uniform value in [0, 1) keyed by (seed, day, shard).
constexpr double unit_uniform(std::uint64_t seed, std::uint64_t day,
                              std::uint64_t shard) noexcept {
  const std::uint64_t h = mix_bits(seed ^ mix_bits(day ^ mix_bits(shard)));
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

}  // namespace exsec
