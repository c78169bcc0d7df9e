#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace entrolab {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p/q" or "p" (optionally signed). The result is canonicalized.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p/q" in lowest terms, or "p" for integers.
std::string to_string(const Rational& q);

Rational make_rational(long num, long den = 1);

/// q^n for n >= 0, exact.
Rational pow(const Rational& q, unsigned long n);

}  // namespace entrolab
