#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace coxchar {

// Exact rational scalar. GMP keeps values canonical (lowest terms, positive
// denominator) once canonicalized; every constructor path in this project
// goes through parse_rational/make_rational or arithmetic, all of which
// yield canonical values.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long num, long den = 1);

// Parses "p" or "p/q" (optional leading sign, arbitrary precision).
Rational parse_rational(std::string_view text);

// Canonical text form: "p" when the denominator is 1, otherwise "p/q".
std::string rational_str(const Rational& value);

// base^exp with exact arithmetic; negative exp inverts (base must be nonzero).
Rational rational_pow(const Rational& base, long exp);

}  // namespace coxchar
