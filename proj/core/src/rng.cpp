#include "schelling/rng.hpp"

#include "schelling/errors.hpp"

namespace schelling {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::next_below(std::uint64_t bound) {
  if (bound == 0) throw Error(Errc::BadParameters, "next_below needs a positive bound");
  // Reject the low tail so every residue is equally likely.
  std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    std::uint64_t raw = next();
    if (raw >= threshold) return raw % bound;
  }
}

void SplitMix64::shuffle(std::vector<int>& values) {
  for (std::size_t i = values.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(next_below(i));
    std::swap(values[i - 1], values[j]);
  }
}

}  // namespace schelling
