#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace permgraph {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Parses "p/q", an integer, or a decimal such as "1.5", "-0.25" or "2e-3"
/// into an exact rational. Decimal input is converted digit by digit, never
/// through a binary float.
Rational parse_rational(std::string_view text);

/// Canonical short form: "3", "-7/2".
std::string to_string(const Rational& value);

/// Always "p/q" (integers become "p/1"); used by every JSON document.
std::string to_fraction_string(const Rational& value);

std::string to_string(const BigInt& value);

Rational power(const Rational& base, std::size_t exponent);
BigInt power(const BigInt& base, std::size_t exponent);

BigInt factorial(std::size_t n);
BigInt binomial(std::size_t n, std::size_t k);

inline bool is_positive(const Rational& value) { return sgn(value) > 0; }

}  // namespace permgraph
