#pragma once

#include <cstdint>
#include <string_view>

namespace lanemeta {

// splitmix64 step; also used to expand seeds.
uint64_t splitmix64(uint64_t& state);

// FNV-1a 64-bit hash, used to key seed derivation by component name.
uint64_t fnv1a64(std::string_view s);

// Derives an independent child seed from a parent seed, a component label
// and up to three indices. Reordering parallel work must not change which
// stream a unit of work gets, so every rollout/episode/init seeds itself
// through this function instead of sharing a mutable generator.
uint64_t derive_seed(uint64_t parent, std::string_view label, uint64_t a = 0,
                     uint64_t b = 0, uint64_t c = 0);

// xoshiro256++ generator. Self-contained so that sequences are identical
// across standard libraries and platforms.
class Rng {
 public:
  explicit Rng(uint64_t seed);

  uint64_t next_u64();

  // Uniform in [0,1) with 53 random bits.
  double uniform01();

  // Uniform in [lo,hi).
  double uniform(double lo, double hi);

  // Uniform integer in [0,n).
  uint64_t uniform_int(uint64_t n);

  // Standard normal via Box-Muller (deterministic, caches the spare value).
  double normal();

 private:
  uint64_t s_[4];
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace lanemeta
