#pragma once

#include <cstdint>
#include <limits>
#include <numeric>

#include "skeinmod/error.hpp"

namespace skeinmod {

__extension__ using wide_int = __int128;

// Overflow-checked helpers for exponent bookkeeping. Exponents are machine
// integers; coefficients are arbitrary precision (see laurent.hpp).

inline std::int64_t narrow_checked(wide_int v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min()) {
    throw Error(ErrorKind::Invalid, "exponent arithmetic overflows 64 bits");
  }
  return static_cast<std::int64_t>(v);
}

inline std::int64_t add_checked(std::int64_t a, std::int64_t b) {
  return narrow_checked(static_cast<wide_int>(a) + b);
}

inline std::int64_t mul_checked(std::int64_t a, std::int64_t b) {
  return narrow_checked(static_cast<wide_int>(a) * b);
}

inline std::int64_t abs_checked(std::int64_t a) {
  return narrow_checked(a < 0 ? -static_cast<wide_int>(a) : a);
}

inline std::int64_t gcd_abs(std::int64_t a, std::int64_t b) {
  return std::gcd(abs_checked(a), abs_checked(b));
}

/// Least non-negative residue of a modulo m (m > 0).
inline std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

struct ExtendedGcd {
  std::int64_t g;  // > 0 unless both inputs are 0
  std::int64_t s;
  std::int64_t t;  // s*a + t*b == g
};

inline ExtendedGcd extended_gcd(std::int64_t a, std::int64_t b) {
  wide_int old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    wide_int q = old_r / r;
    wide_int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return {narrow_checked(old_r), narrow_checked(old_s), narrow_checked(old_t)};
}

}  // namespace skeinmod
