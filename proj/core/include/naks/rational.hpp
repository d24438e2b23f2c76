#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace naks {

using BigInt = mpz_class;
using Rational = mpq_class;

/// num / den in lowest terms.
Rational ratio(const BigInt& num, const BigInt& den);

BigInt pow(const BigInt& base, std::uint64_t exponent);
Rational pow(const Rational& base, std::uint64_t exponent);

/// "num/den", or just "num" when the denominator is 1.
std::string to_string(const Rational& value);
std::string to_string(const BigInt& value);

/// Fixed-point rendering with `places` decimals, ties rounded half to even.
std::string to_decimal(const Rational& value, int places = 6);

Rational parse_rational(const std::string& text);

/// 1 + q + ... + q^(d-1).
BigInt projective_line_count(std::uint64_t q, std::uint32_t d);

}  // namespace naks
