#pragma once

#include <cstdint>
#include <string_view>

#include "hyperqueens/errors.hpp"

namespace hyperqueens::arith {

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::string_view what) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw OverflowError(std::string(what) + " overflows 64 bits");
  }
  return r;
}

inline std::uint64_t pow(std::uint64_t base, unsigned exp, std::string_view what) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) r = mul(r, base, what);
  return r;
}

// base^exp, or limit + 1 once the power exceeds limit. Never overflows.
inline std::uint64_t pow_saturating(std::uint64_t base, unsigned exp, std::uint64_t limit) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && r > limit / base) return limit + 1;
    r *= base;
  }
  return r > limit ? limit + 1 : r;
}

inline std::uint64_t ceil_div(std::uint64_t num, std::uint64_t den) {
  return num / den + (num % den != 0 ? 1 : 0);
}

}  // namespace hyperqueens::arith
