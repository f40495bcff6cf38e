#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

#include "tropicurve/errors.hpp"

namespace tropicurve {

using Integer = mpz_class;
using Rational = mpq_class;

// Parses "p", "p/q", "-p/q" and finite decimals such as "-1.25" or "3e-2"
// into an exact rational. Throws Error(kParseError).
Rational parse_rational(std::string_view text);

// Canonical "p/q" text, or "p" when the denominator is one.
std::string to_string(const Rational& value);

inline Rational make_rational(long numerator, long denominator = 1) {
  Rational r(numerator, denominator);
  r.canonicalize();
  return r;
}

inline std::strong_ordering compare(const Rational& a, const Rational& b) {
  const int c = cmp(a, b);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace tropicurve
