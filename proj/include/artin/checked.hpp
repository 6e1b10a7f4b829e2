#pragma once

#include <cstdint>

#include "artin/error.hpp"

namespace artin::checked {

// Overflow is a hard error; nothing in the library wraps around.

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw Error(Errc::ArithmeticOverflow, "addition overflows int64");
  }
  return out;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_sub_overflow(a, b, &out)) {
    throw Error(Errc::ArithmeticOverflow, "subtraction overflows int64");
  }
  return out;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw Error(Errc::ArithmeticOverflow, "multiplication overflows int64");
  }
  return out;
}

inline std::int64_t neg(std::int64_t a) { return sub(0, a); }

/// Ceiling of num/den for den > 0.
inline std::int64_t ceil_div(std::int64_t num, std::int64_t den) {
  std::int64_t q = num / den;
  if (num % den != 0 && num > 0) q = add(q, 1);
  return q;
}

}  // namespace artin::checked
