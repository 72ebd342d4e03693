#pragma once

#include <cstdint>
#include <random>

#include "rinehart/rational.hpp"

namespace rinehart {

/// Deterministic sample source for the sampled identity checks. The raw
/// mt19937_64 stream is pinned by the C++ standard; bounded draws use
/// rejection sampling because std::uniform_int_distribution is
/// implementation-defined and would break byte-identical reports.
class SampleRng {
 public:
  explicit SampleRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform over {0, ..., n-1}; n >= 1.
  std::uint64_t below(std::uint64_t n);

  /// Uniform over {lo, ..., hi} inclusive.
  long range(long lo, long hi);

  /// Nonzero rational with |numerator| <= max_num and denominator <= max_den.
  Rational small_rational(long max_num, long max_den);

 private:
  std::mt19937_64 engine_;
};

}  // namespace rinehart
