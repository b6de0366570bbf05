#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace prym {

using Integer = mpz_class;
using Rational = mpq_class;

/// Normalized p/q; throws on q == 0.
Rational make_rational(long numerator, long denominator = 1);
Rational make_rational(const Integer& numerator, const Integer& denominator);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

/// Accepts "p" or "p/q" with an optional leading sign.
Rational parse_rational(std::string_view text);

Integer factorial(unsigned n);
Integer power(const Integer& base, unsigned long exponent);
Rational power(const Rational& base, unsigned long exponent);

/// Residue of q modulo p; throws BadPrime when p divides the denominator.
std::uint64_t reduce_mod(const Rational& q, std::uint64_t p);

} // namespace prym
