#include "naks/rational.hpp"

#include <stdexcept>

#include "naks/error.hpp"

namespace naks {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonPrimeModulus: return "NonPrimeModulus";
    case ErrorCode::InvalidLevel: return "InvalidLevel";
    case ErrorCode::MixedRings: return "MixedRings";
    case ErrorCode::NotAUnit: return "NotAUnit";
    case ErrorCode::NotOnSphere: return "NotOnSphere";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::EnumerationTooLarge: return "EnumerationTooLarge";
    case ErrorCode::SetTooLarge: return "SetTooLarge";
    case ErrorCode::EmptySubset: return "EmptySubset";
    case ErrorCode::UnsortedSubset: return "UnsortedSubset";
    case ErrorCode::NonIntegralCount: return "NonIntegralCount";
    case ErrorCode::TooManySubsets: return "TooManySubsets";
    case ErrorCode::SumExplosion: return "SumExplosion";
    case ErrorCode::WrongDimension: return "WrongDimension";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

BigInt pow(const BigInt& base, std::uint64_t exponent) {
  BigInt result;
  if (base == 2 && exponent < (1ULL << 40)) {
    mpz_setbit(result.get_mpz_t(), exponent);
    return result;
  }
  if (exponent > static_cast<std::uint64_t>(~0UL)) throw Error(ErrorCode::InvalidArgument, "exponent too large");
  mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exponent));
  return result;
}

Rational ratio(const BigInt& num, const BigInt& den) {
  Rational result(num, den);
  result.canonicalize();
  return result;
}

Rational pow(const Rational& base, std::uint64_t exponent) {
  Rational result(pow(BigInt(base.get_num()), exponent), pow(BigInt(base.get_den()), exponent));
  // Already canonical: powers of coprime integers stay coprime.
  if (result.get_den() < 0) result.canonicalize();
  return result;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_string(const BigInt& value) { return value.get_str(); }

std::string to_decimal(const Rational& value, int places) {
  if (places < 0) throw Error(ErrorCode::InvalidArgument, "negative decimal places");
  const BigInt scale = pow(BigInt(10), static_cast<std::uint64_t>(places));
  const bool negative = value < 0;
  const Rational magnitude = negative ? Rational(-value) : value;

  BigInt scaled_num = magnitude.get_num() * scale;
  BigInt quotient, remainder;
  mpz_fdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), scaled_num.get_mpz_t(),
              magnitude.get_den().get_mpz_t());
  const int cmp_half = cmp(BigInt(2 * remainder), magnitude.get_den());
  if (cmp_half > 0 || (cmp_half == 0 && mpz_odd_p(quotient.get_mpz_t()))) quotient += 1;

  std::string digits = quotient.get_str();
  if (places > 0) {
    if (digits.size() <= static_cast<std::size_t>(places))
      digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
    digits.insert(digits.size() - static_cast<std::size_t>(places), ".");
  }
  if (negative && quotient != 0) digits.insert(0, "-");
  return digits;
}

Rational parse_rational(const std::string& text) {
  Rational value;
  if (value.set_str(text, 10) != 0) throw Error(ErrorCode::ParseError, "not a rational: '" + text + "'");
  value.canonicalize();
  return value;
}

BigInt projective_line_count(std::uint64_t q, std::uint32_t d) {
  BigInt total = 0;
  BigInt term = 1;
  for (std::uint32_t i = 0; i < d; ++i) {
    total += term;
    term *= static_cast<unsigned long>(q);
  }
  return total;
}

}  // namespace naks
