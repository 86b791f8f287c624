#pragma once

#include <cstdint>

#include "seqcong/errors.hpp"

namespace seqcong {

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("part arithmetic overflow (add)");
  return out;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("part arithmetic overflow (mul)");
  return out;
}

inline std::uint64_t checked_pow(std::uint64_t base, unsigned exponent) {
  std::uint64_t out = 1;
  for (unsigned i = 0; i < exponent; ++i) out = checked_mul(out, base);
  return out;
}

}  // namespace seqcong
