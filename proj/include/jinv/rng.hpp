#pragma once

// Deterministic random rationals of bounded height for Schwartz–Zippel style
// identity checks. Raw engine words are reduced by modulo (not by
// uniform_int_distribution, whose mapping is implementation-defined), so a
// given seed produces the same stream on every platform.

#include <cstdint>
#include <random>

#include "jinv/rational.hpp"

namespace jinv {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t word() { return gen_(); }

  // uniform in [0, m)
  std::uint64_t below(std::uint64_t m) { return gen_() % m; }

  long range(long lo, long hi) {  // inclusive
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::mt19937_64 gen_;
};

// Numerator uniform in [-height, height], denominator in [1, height].
inline Rat random_rat(Rng& rng, long height) {
  long num = rng.range(-height, height);
  long den = rng.range(1, height);
  return rat(num, den);
}

// Random Gaussian rational of bounded height. A fixed nonzero univariate
// polynomial of degree <= 12 has at most 12 roots, so a draw hits one with
// probability <= 12/(2*height+1)^2 over the numerator grid; the exact
// identity checks built on these points are wrong with at most that odds,
// and every asserted identity also holds at *every* point when true.
inline GaussRat random_scalar(Rng& rng, long height) {
  return {random_rat(rng, height), random_rat(rng, height)};
}

}  // namespace jinv
