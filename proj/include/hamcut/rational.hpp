#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hamcut {

// GMP rationals are kept canonical by every arithmetic operator, but the
// (num, den) constructor is not: build fractions with ratio().
using Rational = mpq_class;

inline Rational ratio(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Parses "num/den" or "num" (optional leading '-'); throws Error{ParseError}
/// on malformed text or a zero denominator. The result is reduced.
Rational parse_rational(std::string_view text);

/// Reduced "num/den" form, or "num" when the denominator is one.
std::string to_string(const Rational& value);

inline int sign(const Rational& value) { return sgn(value); }

/// Display-only conversion; never feed the result back into predicates.
double to_double(const Rational& value);

}  // namespace hamcut
