#pragma once

#include <gmpxx.h>

#include <string>

namespace torkit {

using Integer = mpz_class;
using Rational = mpq_class;

// Parses "p" or "p/q" in base 10. Throws std::invalid_argument on malformed
// input or a zero denominator. The result is canonical (reduced, q > 0).
Rational parse_rational(const std::string& text);

std::string rational_str(const Rational& value);
std::string integer_str(const Integer& value);

bool is_integer(const Rational& value);
Integer floor_rational(const Rational& value);

// Representative of value mod modulus in [0, modulus). modulus > 0.
Rational mod_positive(const Rational& value, const Rational& modulus);

Integer lcm(const Integer& a, const Integer& b);

}  // namespace torkit
