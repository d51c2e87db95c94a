#pragma once

#include <gmpxx.h>

#include <string>

namespace ratdec {

// Exact arithmetic is delegated to GMP. mpq_class values are kept canonical
// (denominator > 0, gcd(num, den) = 1) by construction; the helpers below are
// the only places where non-canonical input can enter.
using Integer = mpz_class;
using Rational = mpq_class;

// Throws ZeroDenominatorError when den == 0.
Rational make_rational(const Integer& num, const Integer& den);

// Accepts "p" or "p/q" with optional leading '-'.
Rational rational_from_string(const std::string& text);

// "p" when the denominator is 1, otherwise "p/q" with q > 0.
std::string to_string(const Rational& value);

bool fits_long(const Integer& value);

}  // namespace ratdec
