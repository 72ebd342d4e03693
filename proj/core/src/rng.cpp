#include "rinehart/rng.hpp"

#include <stdexcept>

namespace rinehart {

std::uint64_t SampleRng::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("empty sample range");
  const std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
  for (;;) {
    const std::uint64_t r = engine_();
    if (r >= threshold) return r % n;
  }
}

long SampleRng::range(long lo, long hi) {
  if (hi < lo) throw std::invalid_argument("empty sample range");
  const std::uint64_t width = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(below(width));
}

Rational SampleRng::small_rational(long max_num, long max_den) {
  long num = 0;
  while (num == 0) num = range(-max_num, max_num);
  const long den = range(1, max_den);
  return make_rational(num, den);
}

}  // namespace rinehart
