#pragma once

#include <gmpxx.h>

#include <string>

namespace kron {

// Exact rational scalar. GMP keeps values canonical (lowest terms, positive
// denominator) through arithmetic.
using Rational = mpq_class;

// Parses "p", "-p", or "p/q" where p, q are decimal digit strings and q is
// nonzero. The sign may only appear on the numerator. Throws ParseError on
// anything else.
Rational parse_rational(const std::string& text);

// Renders in lowest terms as "p/q", or "p" when the denominator is 1.
std::string format_rational(const Rational& value);

}  // namespace kron
