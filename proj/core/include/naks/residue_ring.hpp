#pragma once

// Truncated local rings R_n = R / m^n for R = Z_p (Z / p^n Z) and
// R = F_p[[t]] (F_p[t] / t^n).
//
// Elements of both families share one representation: the n base-p digits
// s_0, ..., s_{n-1} of x = s_0 + s_1 pi + ... + s_{n-1} pi^(n-1), with the
// digit set {0, ..., p-1}. They are packed little-endian into one integer
// sum s_i p^i in [0, p^n). For the p-adic family the packed integer is the
// residue itself; for the series family it is only an encoding, and
// arithmetic works digit by digit without carries.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace naks {

enum class Family : std::uint8_t { padic, series };

std::string_view to_string(Family family) noexcept;
Family parse_family(std::string_view text);

bool is_prime(std::uint64_t value) noexcept;

/// Descriptor of R_n. Immutable and cheap to copy.
class Ring {
 public:
  /// Throws NonPrimeModulus / InvalidLevel. p^n must stay below 2^62.
  static Ring make(Family family, std::uint64_t p, std::uint32_t n);
  /// Parses "padic:p=2,n=3" / "series:p=2,n=3".
  static Ring parse(std::string_view text);

  Family family() const noexcept { return family_; }
  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t n() const noexcept { return n_; }
  /// Card R_n = p^n.
  std::uint64_t size() const noexcept { return size_; }
  /// p^k for 0 <= k <= n.
  std::uint64_t radix_power(std::uint32_t k) const noexcept;

  /// Same family and p, level m.
  Ring at_level(std::uint32_t m) const;

  std::string to_string() const;

  bool operator==(const Ring&) const noexcept = default;

  // Packed-integer kernels. Arguments must lie in [0, size()).
  std::uint64_t add(std::uint64_t x, std::uint64_t y) const noexcept;
  std::uint64_t sub(std::uint64_t x, std::uint64_t y) const noexcept;
  std::uint64_t neg(std::uint64_t x) const noexcept;
  std::uint64_t mul(std::uint64_t x, std::uint64_t y) const noexcept;
  /// pi^k * x, i.e. shift the digits up by k (truncating).
  std::uint64_t shift(std::uint64_t x, std::uint32_t k) const noexcept;
  /// Index of the first nonzero digit; n for zero.
  std::uint32_t valuation(std::uint64_t x) const noexcept;
  bool is_unit(std::uint64_t x) const noexcept { return x % p_ != 0; }
  /// Throws NotAUnit.
  std::uint64_t inverse(std::uint64_t x) const;
  /// Reduction to level m (prefix of the digits).
  std::uint64_t reduce(std::uint64_t x, std::uint32_t m) const;

  std::vector<std::uint32_t> digits(std::uint64_t x) const;
  std::uint64_t pack(std::span<const std::uint32_t> digits) const;

  /// Digits least significant first, one character each (0-9a-z).
  std::string format(std::uint64_t x) const;
  std::uint64_t parse_value(std::string_view text) const;

 private:
  Ring(Family family, std::uint32_t p, std::uint32_t n, std::uint64_t size)
      : family_(family), p_(p), n_(n), size_(size) {}

  Family family_;
  std::uint32_t p_;
  std::uint32_t n_;
  std::uint64_t size_;
};

/// An element of R_n bound to its ring.
class RingElement {
 public:
  RingElement(const Ring& ring, std::uint64_t packed);

  static RingElement zero(const Ring& ring) { return {ring, 0}; }
  static RingElement one(const Ring& ring) { return {ring, 1}; }
  static RingElement from_digits(const Ring& ring, std::span<const std::uint32_t> digits);
  static RingElement parse(const Ring& ring, std::string_view text);

  const Ring& ring() const noexcept { return ring_; }
  std::uint64_t packed() const noexcept { return packed_; }
  std::vector<std::uint32_t> digits() const { return ring_.digits(packed_); }
  std::string to_string() const { return ring_.format(packed_); }

  bool operator==(const RingElement&) const noexcept = default;

 private:
  Ring ring_;
  std::uint64_t packed_;
};

Ring make_ring(Family family, std::uint64_t p, std::uint32_t n);

RingElement ring_add(const RingElement& x, const RingElement& y);
RingElement ring_sub(const RingElement& x, const RingElement& y);
RingElement ring_mul(const RingElement& x, const RingElement& y);
bool is_unit(const RingElement& x) noexcept;
RingElement ring_inverse(const RingElement& x);
std::uint32_t valuation(const RingElement& x) noexcept;
RingElement reduce_level(const RingElement& x, std::uint32_t m);

inline RingElement operator+(const RingElement& x, const RingElement& y) { return ring_add(x, y); }
inline RingElement operator-(const RingElement& x, const RingElement& y) { return ring_sub(x, y); }
inline RingElement operator*(const RingElement& x, const RingElement& y) { return ring_mul(x, y); }

}  // namespace naks
