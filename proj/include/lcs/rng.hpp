#pragma once
// Deterministic seeded randomness. Rationals are drawn with numerators in
// [-10^6, 10^6] over a shared large prime denominator; reduction is done by
// plain modulo so streams are identical across standard library
// implementations.

#include <cstdint>
#include <random>

#include "lcs/rat.hpp"

namespace lcs {

class Rng {
 public:
  static constexpr long kNumBound = 1000000;
  static constexpr long kDen = 1000003;  // prime

  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  // Uniform-ish integer in [lo, hi], inclusive. Modulo bias is irrelevant for
  // genericity draws; determinism matters.
  long next_long(long lo, long hi) {
    return lo + static_cast<long>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  Q next_rat() { return qq(next_long(-kNumBound, kNumBound), kDen); }

  Q next_nonzero_rat() {
    for (;;) {
      Q q = next_rat();
      if (q != 0) return q;
    }
  }

  Q next_pos_rat() { return qq(next_long(1, kNumBound), kDen); }

 private:
  std::mt19937_64 eng_;
};

}  // namespace lcs
