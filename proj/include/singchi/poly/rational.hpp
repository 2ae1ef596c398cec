#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace singchi::poly {

/// Exact rational number. GMP keeps every result of arithmetic in lowest
/// terms with a positive denominator; values built from a numerator and
/// denominator must go through `make_rational`.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(const Integer& num, const Integer& den);

/// Parses "p" or "p/q" with optional leading sign. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

bool is_integer(const Rational& q);

/// Throws std::overflow_error unless q is an integer fitting in int64.
std::int64_t to_int64(const Rational& q);

Rational factorial(unsigned n);

}  // namespace singchi::poly
