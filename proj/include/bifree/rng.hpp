#pragma once

#include <cstdint>

#include "bifree/transforms.hpp"

namespace bifree {

/// xoshiro256** seeded through splitmix64, so identical seeds reproduce
/// identical trial data in any implementation language. Draw order is
/// documented with each generator below.
class Rng {
public:
  explicit Rng(std::uint64_t seed);
  std::uint64_t next();
  /// Uniform value in [lo, hi] by modulo reduction (documented, reproducible;
  /// the tiny bias is irrelevant for test-data generation).
  long bounded(long lo, long hi);

private:
  std::uint64_t s_[4];
};

/// Numerator in [-9, 9], denominator in [1, 9].
Rat random_rational(Rng& rng);
/// Same, with the numerator redrawn until nonzero.
Rat random_nonzero_rational(Rng& rng);

/// Draw order: kappa_a[1..N], kappa_b[1..M], then kappa_ab row by row.
/// With `nonzero_means`, the two kappa_1 draws are redrawn until nonzero.
PairSpec random_pair_spec(Rng& rng, int order_a, int order_b, bool nonzero_means);

/// Draw order: moments phi(a^n b^m) for n+m >= 1, row by row.
MomentSpec random_moment_spec(Rng& rng, int order_a, int order_b);

/// Sequence of `count` rationals, in draw order.
std::vector<Rat> random_rationals(Rng& rng, int count);

}  // namespace bifree
