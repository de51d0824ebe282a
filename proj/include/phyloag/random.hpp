#pragma once

#include <cstdint>
#include <vector>

#include "phyloag/poly.hpp"

namespace phyloag {

// SplitMix64 finalizer: a bijective 64-bit mixing function.
std::uint64_t mix64(std::uint64_t x);

// Counter-based 64-bit generator: draw i of stream s under seed k is
// mix64(mix64(k ^ mix64(s)) + i * golden). Streams are independent of
// the order in which they are consumed.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0);
  std::uint64_t next();
  // Uniform integer in [lo, hi] by rejection.
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi);
  // Uniform double in [0, 1) with 53 random bits.
  double uniform01();

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

// Random positive rational point: numerator and denominator uniform in
// [1, 97] for every variable.
Assignment random_point(const std::vector<VarId>& vars, CounterRng& rng);

}  // namespace phyloag
