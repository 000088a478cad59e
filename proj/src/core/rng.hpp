#pragma once

#include <cstdint>
#include <random>

namespace dirgrad {

// Seeded random generator with portable output. The engine (std::mt19937_64)
// and every distribution here are fully specified, so a seed reproduces the
// same stream on any platform; std::*_distribution is avoided on purpose.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next_u64();

  // Uniform on [0, 1) with 53 random bits.
  double uniform01();

  double uniform(double lo, double hi);

  // Standard normal via the Marsaglia polar method (second value cached).
  double normal();

  // N(0, sd^2) hard-clamped to [-clamp*sd, clamp*sd].
  double truncated_normal(double sd, double clamp);

  // Deterministically derived, statistically independent child stream.
  Rng split(std::uint64_t stream_id) const;

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  bool has_cached_ = false;
  double cached_ = 0.0;
};

// SplitMix64 step; used for seed derivation.
std::uint64_t mix_u64(std::uint64_t x);

}  // namespace dirgrad
