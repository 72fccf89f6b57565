#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace tutte_ss {

// Arbitrary-precision integers and rationals. mpq_class is kept in lowest
// terms with a positive denominator as long as every mutation goes through
// its operators (mpq_class canonicalizes after each one).
using BigInt = mpz_class;
using Rational = mpq_class;

BigInt pow(const BigInt& base, unsigned long exponent);
Rational pow(const Rational& base, long exponent);
BigInt pow_ui(unsigned long base, unsigned long exponent);

// Parses "a", "-a", "a/b" (b != 0). Decimal notation like "1.5" is also
// accepted and converted exactly.
Rational parse_rational(std::string_view text);

std::string to_string(const BigInt& value);
std::string to_string(const Rational& value);

// True when the rational has denominator 1.
bool is_integer(const Rational& value);
// Throws Error(InvalidArgument) when value is not integral.
BigInt to_integer(const Rational& value);

}  // namespace tutte_ss
