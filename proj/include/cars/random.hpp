#pragma once

#include <cstdint>
#include <random>

namespace cars {

// Uniform doubles built from the top 53 bits of a 64-bit draw. Bypassing
// std::uniform_real_distribution keeps the value sequence identical across
// standard library implementations, which the reproducibility guarantees
// rely on.

// [0, 1)
inline double uniform_half_open(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// (0, 1): offset by half an ulp so neither endpoint can occur.
inline double uniform_open(std::mt19937_64& rng) {
  return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

// [lo, hi)
inline double uniform_in(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform_half_open(rng);
}

}  // namespace cars
