#include "naks/residue_ring.hpp"

#include <limits>

#include "naks/error.hpp"

namespace naks {

namespace {

constexpr std::uint64_t kMaxRingSize = 1ULL << 62;
constexpr std::string_view kDigitChars = "0123456789abcdefghijklmnopqrstuvwxyz";

int digit_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'z') return c - 'a' + 10;
  if (c >= 'A' && c <= 'Z') return c - 'A' + 10;
  return -1;
}

std::uint64_t parse_uint(std::string_view text) {
  if (text.empty()) throw Error(ErrorCode::ParseError, "empty integer");
  std::uint64_t value = 0;
  for (char c : text) {
    if (c < '0' || c > '9') throw Error(ErrorCode::ParseError, "bad integer '" + std::string(text) + "'");
    if (value > (std::numeric_limits<std::uint64_t>::max() - 9) / 10)
      throw Error(ErrorCode::ParseError, "integer overflow");
    value = value * 10 + static_cast<std::uint64_t>(c - '0');
  }
  return value;
}

void require_same_ring(const RingElement& x, const RingElement& y) {
  if (x.ring() != y.ring())
    throw Error(ErrorCode::MixedRings, x.ring().to_string() + " vs " + y.ring().to_string());
}

}  // namespace

std::string_view to_string(Family family) noexcept {
  return family == Family::padic ? "padic" : "series";
}

Family parse_family(std::string_view text) {
  if (text == "padic") return Family::padic;
  if (text == "series") return Family::series;
  throw Error(ErrorCode::ParseError, "unknown ring family '" + std::string(text) + "'");
}

bool is_prime(std::uint64_t value) noexcept {
  if (value < 2) return false;
  if (value % 2 == 0) return value == 2;
  for (std::uint64_t f = 3; f <= value / f; f += 2)
    if (value % f == 0) return false;
  return true;
}

Ring Ring::make(Family family, std::uint64_t p, std::uint32_t n) {
  if (p > std::numeric_limits<std::uint32_t>::max() || !is_prime(p))
    throw Error(ErrorCode::NonPrimeModulus, "p = " + std::to_string(p) + " is not a prime");
  if (n < 1) throw Error(ErrorCode::InvalidLevel, "level must be >= 1");
  std::uint64_t size = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (size > kMaxRingSize / p)
      throw Error(ErrorCode::InvalidLevel, "p^n exceeds 2^62 for p = " + std::to_string(p) +
                                               ", n = " + std::to_string(n));
    size *= p;
  }
  return Ring(family, static_cast<std::uint32_t>(p), n, size);
}

Ring make_ring(Family family, std::uint64_t p, std::uint32_t n) { return Ring::make(family, p, n); }

Ring Ring::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw Error(ErrorCode::ParseError, "ring string lacks ':'");
  const Family family = parse_family(text.substr(0, colon));
  std::string_view rest = text.substr(colon + 1);
  const auto comma = rest.find(',');
  if (comma == std::string_view::npos || rest.substr(0, 2) != "p=" || rest.substr(comma + 1, 2) != "n=")
    throw Error(ErrorCode::ParseError, "expected 'p=<p>,n=<n>' in '" + std::string(text) + "'");
  const std::uint64_t p = parse_uint(rest.substr(2, comma - 2));
  const std::uint64_t n = parse_uint(rest.substr(comma + 3));
  if (n > std::numeric_limits<std::uint32_t>::max()) throw Error(ErrorCode::InvalidLevel, "level too large");
  return make(family, p, static_cast<std::uint32_t>(n));
}

std::uint64_t Ring::radix_power(std::uint32_t k) const noexcept {
  std::uint64_t result = 1;
  for (std::uint32_t i = 0; i < k && i < n_; ++i) result *= p_;
  return result;
}

Ring Ring::at_level(std::uint32_t m) const { return make(family_, p_, m); }

std::string Ring::to_string() const {
  return std::string(naks::to_string(family_)) + ":p=" + std::to_string(p_) + ",n=" + std::to_string(n_);
}

std::uint64_t Ring::add(std::uint64_t x, std::uint64_t y) const noexcept {
  if (family_ == Family::padic) {
    const std::uint64_t s = x + y;
    return s >= size_ ? s - size_ : s;
  }
  if (p_ == 2) return x ^ y;
  std::uint64_t result = 0;
  std::uint64_t place = 1;
  for (std::uint32_t i = 0; i < n_; ++i) {
    std::uint64_t digit = x % p_ + y % p_;
    if (digit >= p_) digit -= p_;
    result += digit * place;
    place *= p_;
    x /= p_;
    y /= p_;
  }
  return result;
}

std::uint64_t Ring::neg(std::uint64_t x) const noexcept {
  if (family_ == Family::padic) return x == 0 ? 0 : size_ - x;
  if (p_ == 2) return x;
  std::uint64_t result = 0;
  std::uint64_t place = 1;
  for (std::uint32_t i = 0; i < n_; ++i) {
    const std::uint64_t digit = x % p_;
    if (digit != 0) result += (p_ - digit) * place;
    place *= p_;
    x /= p_;
  }
  return result;
}

std::uint64_t Ring::sub(std::uint64_t x, std::uint64_t y) const noexcept { return add(x, neg(y)); }

std::uint64_t Ring::mul(std::uint64_t x, std::uint64_t y) const noexcept {
  if (family_ == Family::padic)
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * y % size_);
  const auto dx = digits(x);
  const auto dy = digits(y);
  std::vector<std::uint64_t> acc(n_, 0);
  for (std::uint32_t i = 0; i < n_; ++i) {
    if (dx[i] == 0) continue;
    for (std::uint32_t j = 0; i + j < n_; ++j) acc[i + j] = (acc[i + j] + std::uint64_t{dx[i]} * dy[j]) % p_;
  }
  std::uint64_t result = 0;
  for (std::uint32_t k = n_; k-- > 0;) result = result * p_ + acc[k];
  return result;
}

std::uint64_t Ring::shift(std::uint64_t x, std::uint32_t k) const noexcept {
  if (k >= n_) return 0;
  const std::uint64_t low = radix_power(n_ - k);
  return (x % low) * radix_power(k);
}

std::uint32_t Ring::valuation(std::uint64_t x) const noexcept {
  if (x == 0) return n_;
  std::uint32_t v = 0;
  while (x % p_ == 0) {
    x /= p_;
    ++v;
  }
  return v;
}

std::uint64_t Ring::inverse(std::uint64_t x) const {
  if (!is_unit(x)) throw Error(ErrorCode::NotAUnit, format(x) + " is not a unit in " + to_string());
  // Inverse of the residue digit by Fermat, then Newton lifting
  // y <- y (2 - x y), which squares the error 1 - x y at each step.
  const std::uint64_t residue = x % p_;
  std::uint64_t base = residue;
  std::uint64_t y = 1;
  for (std::uint64_t e = p_ - 2; e > 0; e >>= 1) {
    if (e & 1) y = y * base % p_;
    base = base * base % p_;
  }
  for (std::uint32_t precision = 1; precision < n_; precision *= 2) {
    const std::uint64_t two_y = add(y, y);
    y = sub(two_y, mul(x, mul(y, y)));
  }
  return y;
}

std::uint64_t Ring::reduce(std::uint64_t x, std::uint32_t m) const {
  if (m < 1 || m > n_)
    throw Error(ErrorCode::InvalidLevel, "cannot reduce level " + std::to_string(n_) + " to " + std::to_string(m));
  return x % radix_power(m);
}

std::vector<std::uint32_t> Ring::digits(std::uint64_t x) const {
  std::vector<std::uint32_t> out(n_);
  for (std::uint32_t i = 0; i < n_; ++i) {
    out[i] = static_cast<std::uint32_t>(x % p_);
    x /= p_;
  }
  return out;
}

std::uint64_t Ring::pack(std::span<const std::uint32_t> digits) const {
  if (digits.size() != n_)
    throw Error(ErrorCode::InvalidArgument,
                "expected " + std::to_string(n_) + " digits, got " + std::to_string(digits.size()));
  std::uint64_t result = 0;
  for (std::size_t k = digits.size(); k-- > 0;) {
    if (digits[k] >= p_) throw Error(ErrorCode::InvalidArgument, "digit out of range");
    result = result * p_ + digits[k];
  }
  return result;
}

std::string Ring::format(std::uint64_t x) const {
  if (p_ > kDigitChars.size()) throw Error(ErrorCode::InvalidArgument, "text format needs p <= 36");
  std::string out(n_, '0');
  for (std::uint32_t i = 0; i < n_; ++i) {
    out[i] = kDigitChars[x % p_];
    x /= p_;
  }
  return out;
}

std::uint64_t Ring::parse_value(std::string_view text) const {
  if (text.size() != n_)
    throw Error(ErrorCode::ParseError, "element '" + std::string(text) + "' must have " + std::to_string(n_) + " digits");
  std::uint64_t result = 0;
  for (std::size_t k = text.size(); k-- > 0;) {
    const int digit = digit_value(text[k]);
    if (digit < 0 || static_cast<std::uint32_t>(digit) >= p_)
      throw Error(ErrorCode::ParseError, "bad digit in '" + std::string(text) + "'");
    result = result * p_ + static_cast<std::uint64_t>(digit);
  }
  return result;
}

RingElement::RingElement(const Ring& ring, std::uint64_t packed) : ring_(ring), packed_(packed) {
  if (packed >= ring.size()) throw Error(ErrorCode::InvalidArgument, "packed value out of range");
}

RingElement RingElement::from_digits(const Ring& ring, std::span<const std::uint32_t> digits) {
  return {ring, ring.pack(digits)};
}

RingElement RingElement::parse(const Ring& ring, std::string_view text) {
  return {ring, ring.parse_value(text)};
}

RingElement ring_add(const RingElement& x, const RingElement& y) {
  require_same_ring(x, y);
  return {x.ring(), x.ring().add(x.packed(), y.packed())};
}

RingElement ring_sub(const RingElement& x, const RingElement& y) {
  require_same_ring(x, y);
  return {x.ring(), x.ring().sub(x.packed(), y.packed())};
}

RingElement ring_mul(const RingElement& x, const RingElement& y) {
  require_same_ring(x, y);
  return {x.ring(), x.ring().mul(x.packed(), y.packed())};
}

bool is_unit(const RingElement& x) noexcept { return x.ring().is_unit(x.packed()); }

RingElement ring_inverse(const RingElement& x) { return {x.ring(), x.ring().inverse(x.packed())}; }

std::uint32_t valuation(const RingElement& x) noexcept { return x.ring().valuation(x.packed()); }

RingElement reduce_level(const RingElement& x, std::uint32_t m) {
  const std::uint64_t reduced = x.ring().reduce(x.packed(), m);
  return {x.ring().at_level(m), reduced};
}

}  // namespace naks
