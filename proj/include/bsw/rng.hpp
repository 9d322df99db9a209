#pragma once

#include <cstdint>
#include <random>

#include "bsw/rational.hpp"

namespace bsw {

// Deterministic RNG for property sampling. mt19937_64 output is fixed by the
// standard and the bounded draw below avoids distribution classes, whose
// mappings vary across library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : g_(seed) {}

  // Uniform-ish integer in [lo, hi], inclusive; exact determinism matters
  // more than the negligible modulo bias at these ranges.
  int irange(int lo, int hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<int>(g_() % span);
  }

  Rational coefficient() { return Rational(irange(-5, 5)); }

  std::uint64_t raw() { return g_(); }

 private:
  std::mt19937_64 g_;
};

}  // namespace bsw
