#pragma once

// Kakeya sets N(f) = union over directions a of
//   S_a(f) = { t can(a) + f(a) : t in R_n }
// stored as a dense bit array over R_n^d. Cell (x_1, ..., x_d) has index
// sum_i packed(x_i) p^{n i} (coordinates 0-based).

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <span>
#include <vector>

#include "naks/bit_array.hpp"
#include "naks/lipschitz.hpp"
#include "naks/projective.hpp"
#include "naks/rational.hpp"

namespace naks {

inline constexpr std::uint64_t kDefaultMemoryCap = std::uint64_t{2} << 30;  // bytes

/// Number of cells p^{nd}; throws SetTooLarge if the bit array would exceed
/// `memory_cap` bytes.
std::uint64_t cell_count(const Ring& ring, std::uint32_t d, std::uint64_t memory_cap = kDefaultMemoryCap);

std::uint64_t encode_cell(const Ring& ring, std::span<const std::uint64_t> coords);
std::vector<std::uint64_t> decode_cell(const Ring& ring, std::uint32_t d, std::uint64_t cell);

class KakeyaSet {
 public:
  KakeyaSet(const Ring& ring, std::uint32_t d, BitArray bits);

  const Ring& ring() const noexcept { return ring_; }
  std::uint32_t dimension() const noexcept { return d_; }
  std::uint64_t card() const noexcept { return card_; }
  const BitArray& bits() const noexcept { return bits_; }
  bool contains(std::uint64_t cell) const noexcept { return bits_.test(cell); }
  bool contains(std::span<const std::uint64_t> coords) const { return contains(encode_cell(ring_, coords)); }

  /// Occupied cells in increasing index order.
  std::vector<std::uint64_t> cells() const;

 private:
  Ring ring_;
  std::uint32_t d_;
  BitArray bits_;
  std::uint64_t card_;
};

/// Reusable builder: one per worker, one bit array reused across samples.
class KakeyaBuilder {
 public:
  explicit KakeyaBuilder(std::shared_ptr<const ProjectiveSpace> space,
                         std::uint64_t memory_cap = kDefaultMemoryCap);

  /// Marks N(f) and returns its cardinality.
  std::uint64_t build(const LipschitzMap& map);
  const BitArray& bits() const noexcept { return bits_; }
  KakeyaSet snapshot() const;

 private:
  std::shared_ptr<const ProjectiveSpace> space_;
  BitArray bits_;
  std::vector<std::uint64_t> strides_;
  std::vector<std::uint64_t> steps_;
  std::vector<std::uint64_t> point_;
};

KakeyaSet build_kakeya(const LipschitzMap& map, std::uint64_t memory_cap = kDefaultMemoryCap);

/// card / p^{nd}.
Rational measure(const KakeyaSet& set);

/// Cells { t can(a) + base : t in m^ell }, in order of increasing t.
std::vector<std::uint64_t> segment(const ProjectivePoint& direction, std::span<const std::uint64_t> base,
                                   std::uint32_t ell);

/// Card(S_a intersect S_b) by direct set intersection. Requires a != b.
std::uint64_t segment_intersection_card(const ProjectivePoint& a, std::span<const std::uint64_t> base_a,
                                        const ProjectivePoint& b, std::span<const std::uint64_t> base_b,
                                        std::uint32_t ell);

/// Card of the intersection of the unit segments S_a(f), a in `subset`
/// (point indices). Throws EmptySubset.
std::uint64_t intersection_card_C_A(const LipschitzMap& map, std::span<const std::uint64_t> subset);

/// Binary export: 16-byte little-endian header ("NAKS", u32 p, u16 n, u16 d,
/// u8 family, u8 bit order = 0 for LSB-first, u16 reserved), then the bit
/// array as ceil(p^{nd} / 8) bytes, cell i at byte i/8, bit i%8.
void write_set(const KakeyaSet& set, std::ostream& out);
KakeyaSet read_set(std::istream& in);

/// CSV point list with header x_1,...,x_d (ring element text format).
void write_set_points_csv(const KakeyaSet& set, std::ostream& out);

}  // namespace naks
