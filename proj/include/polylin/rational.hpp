#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace polylin {

/// Exact rational scalar. mpq_class keeps the value canonical (reduced,
/// positive denominator, zero as 0/1) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p/q" or "p" (optional sign, decimal digits). Throws ParseError.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when q = 1.
std::string to_string(const Rational& r);

Integer binomial(long n, long k);

}  // namespace polylin
