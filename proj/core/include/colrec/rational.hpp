#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace colrec {

/// Exact rational number. All counting and matrix paths use this type.
using Rational = mpq_class;
using Integer = mpz_class;

/// num/den in lowest terms; den must be nonzero.
Rational ratio(long num, long den);

/// Renders "p" for integers and "p/q" otherwise (canonical, q > 0).
std::string to_string(const Rational& x);

/// Parses "p", "-p", or "p/q". Throws std::invalid_argument on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// x^k for any integer k; x must be nonzero when k < 0.
Rational pow(const Rational& x, long k);

bool is_integer(const Rational& x);

}  // namespace colrec
