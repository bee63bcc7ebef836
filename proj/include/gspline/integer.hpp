#pragma once

// Checked 64-bit integer helpers. Every operation either returns the exact
// result or throws Error(Overflow); nothing wraps silently.

#include <cstdint>
#include <string>

#include "gspline/error.hpp"

namespace gspline {

using Int = std::int64_t;

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "integer addition");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "integer subtraction");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "integer multiplication");
  return r;
}

inline Int checked_neg(Int a) { return checked_sub(0, a); }

inline Int checked_abs(Int a) { return a < 0 ? checked_neg(a) : a; }

/// Least nonnegative residue of a modulo m (m > 0).
inline Int floor_mod(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

/// Nonnegative gcd; gcd(0, 0) = 0.
inline Int gcd(Int a, Int b) {
  a = checked_abs(a);
  b = checked_abs(b);
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

/// Nonnegative lcm; lcm(0, x) = 0.
inline Int lcm(Int a, Int b) {
  if (a == 0 || b == 0) return 0;
  return checked_abs(checked_mul(a / gcd(a, b), b));
}

struct Bezout {
  Int gcd;
  Int s;
  Int t;
};

/// s*a + t*b = gcd >= 0.
inline Bezout extended_gcd(Int a, Int b) {
  Int old_r = a, r = b;
  Int old_s = 1, s = 0;
  Int old_t = 0, t = 1;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp = checked_sub(old_r, checked_mul(q, r));
    old_r = r;
    r = tmp;
    tmp = checked_sub(old_s, checked_mul(q, s));
    old_s = s;
    s = tmp;
    tmp = checked_sub(old_t, checked_mul(q, t));
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) return {checked_neg(old_r), checked_neg(old_s), checked_neg(old_t)};
  return {old_r, old_s, old_t};
}

/// (a * b) mod m without intermediate overflow, result in [0, m).
inline Int mul_mod(Int a, Int b, Int m) {
  __int128 p = static_cast<__int128>(a) * static_cast<__int128>(b);
  __int128 r = p % m;
  if (r < 0) r += m;
  return static_cast<Int>(r);
}

}  // namespace gspline
