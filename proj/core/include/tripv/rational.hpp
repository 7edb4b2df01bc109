#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace tripv {

/// Exact rationals. mpq_class keeps values canonical (reduced, positive
/// denominator, zero as 0/1) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

/// "num/den", or just "num" when the denominator is one.
std::string to_string(const Rational& q);

/// Accepts "a", "-a", "a/b". Throws ParseError on anything else or b == 0.
Rational parse_rational(std::string_view text);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace tripv
