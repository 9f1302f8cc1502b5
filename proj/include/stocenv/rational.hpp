#pragma once

#include <gmpxx.h>

#include <string>

namespace stocenv {

using Rational = mpq_class;
using Integer = mpz_class;

/**
 * Parse an exact rational from "p/q", integer, or decimal notation.
 * Decimal strings convert exactly (e.g. "0.25" -> 1/4). Throws ParseError.
 */
Rational parse_rational(const std::string& text);

/// Canonical "p/q" rendering; integers render without the "/1".
std::string rational_to_string(const Rational& q);

/// Exact conversion of a finite double into a rational (used for tolerances).
Rational rational_from_double(double x);

}  // namespace stocenv
