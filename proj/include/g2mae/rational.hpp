#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>

namespace g2mae {

/// Exact rational scalar used throughout; always kept canonicalized.
using Rat = mpq_class;

/// Canonicalized rational num/den (den != 0).
Rat rat(long num, long den = 1);

/// Renders "p" when the denominator is 1, "p/q" otherwise.
std::string rat_str(const Rat& q);

/// Parses "p" or "p/q"; throws std::invalid_argument on malformed input.
Rat rat_parse(const std::string& s);

/// Deterministic generator of small rationals for property tests and
/// hypersurface sampling. Same seed, same stream, regardless of thread count.
class RatSampler {
 public:
  explicit RatSampler(std::uint64_t seed) : rng_(seed) {}

  /// p/q with p in [-9,9], q in [1,9].
  Rat next();
  Rat next_nonzero();
  long next_int(long lo, long hi);

 private:
  std::mt19937_64 rng_;
};

}  // namespace g2mae
