#pragma once

#include <cstdint>
#include <vector>

namespace schelling {

// SplitMix64. Fixed across platforms so seeded outputs are reproducible
// byte for byte.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();

  // Uniform over [0, bound) by modulo rejection; bound must be positive.
  std::uint64_t next_below(std::uint64_t bound);

  // Fisher-Yates; uniform over permutations.
  void shuffle(std::vector<int>& values);

 private:
  std::uint64_t state_;
};

}  // namespace schelling
