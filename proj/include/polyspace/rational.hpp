#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace polyspace {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Parses "p/q", an integer, or a decimal such as "-0.125" or "2.5e-3".
/// Decimals are read exactly in base 10, so "0.1" is 1/10.
Rational parse_rational(std::string_view text);

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& value);

/// Fixed-point decimal rendering with `digits` fractional digits, rounded
/// half away from zero.
std::string to_decimal(const Rational& value, int digits = 12);

double to_double(const Rational& value);

BigInt binomial(std::int64_t n, std::int64_t k);

/// 2^exponent for any sign of exponent.
Rational pow2(std::int64_t exponent);

Rational pow(const Rational& base, std::uint32_t exponent);

} // namespace polyspace
