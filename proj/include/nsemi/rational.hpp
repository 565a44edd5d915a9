#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <string>

#include "nsemi/errors.hpp"

namespace nsemi {

using Int = std::int64_t;
using Rational = boost::rational<Int>;

inline Int floor_rational(const Rational& r) {
  Int q = r.numerator() / r.denominator();
  if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) --q;
  return q;
}

inline std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

// Exact floor of sqrt(n) by integer Newton iteration; no floating point.
inline Int isqrt(Int n) {
  if (n < 0) throw Error("isqrt of negative value");
  if (n < 2) return n;
  Int x = n;
  Int y = (x + 1) / 2;
  while (y < x) {
    x = y;
    y = (x + n / x) / 2;
  }
  return x;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError();
  return r;
}

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError();
  return r;
}

// a^e with overflow checking.
inline Int checked_pow(Int a, Int e) {
  Int r = 1;
  for (Int k = 0; k < e; ++k) r = checked_mul(r, a);
  return r;
}

inline Int ceil_div(Int a, Int b) { return (a + b - 1) / b; }

}  // namespace nsemi
