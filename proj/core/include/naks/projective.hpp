#pragma once

// The finite projective space P^{d-1}(R_n).
//
// A point is stored through its canonical representative: the unique vector
// whose first unit coordinate (the pivot) equals 1. Pivots are 0-based here
// and in every machine-readable output.
//
// Points are totally ordered by (pivot, level-0 digits of all coordinates,
// level-1 digits, ...). Points sharing a specialization to any level m form
// a contiguous run in this order, so the order refines the fibres of every
// specialization map. The index of a point is its rank in this order; the
// order is a stable public contract.

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "naks/rational.hpp"
#include "naks/residue_ring.hpp"

namespace naks {

class ProjectivePoint {
 public:
  /// Takes an already-canonical representative; validates it.
  ProjectivePoint(const Ring& ring, std::vector<std::uint64_t> canonical);

  const Ring& ring() const noexcept { return ring_; }
  std::uint32_t dimension() const noexcept { return static_cast<std::uint32_t>(can_.size()); }
  std::uint32_t level() const noexcept { return ring_.n(); }
  std::uint32_t pivot() const noexcept { return pivot_; }
  std::span<const std::uint64_t> canonical() const noexcept { return can_; }
  RingElement coordinate(std::uint32_t i) const { return {ring_, can_.at(i)}; }

  /// "[c_1:...:c_d]@n" with coordinates in the ring element text format.
  std::string to_string() const;
  static ProjectivePoint parse(const Ring& ring, std::string_view text);

  bool operator==(const ProjectivePoint& other) const noexcept {
    return ring_ == other.ring_ && can_ == other.can_;
  }
  /// The enumeration order. Both points must live in the same space.
  std::strong_ordering operator<=>(const ProjectivePoint& other) const;

 private:
  Ring ring_;
  std::vector<std::uint64_t> can_;
  std::uint32_t pivot_;
};

/// Rescales by the inverse of the first unit coordinate. Throws NotOnSphere.
ProjectivePoint canonicalize(const Ring& ring, std::span<const std::uint64_t> vector);
ProjectivePoint canonicalize(std::span<const RingElement> vector);

/// q^{(d-1)(n-1)} (q^d - 1)/(q - 1).
BigInt projective_cardinality(std::uint64_t q, std::uint32_t d, std::uint32_t n);

ProjectivePoint specialize(const ProjectivePoint& point, std::uint32_t m);

/// Largest v in [0, n] with equal level-v specializations. Throws MixedRings.
std::uint32_t valuation_distance(const ProjectivePoint& a, const ProjectivePoint& b);

/// Dense, index-addressable table of P^{d-1}(R_n). Immutable once built.
class ProjectiveSpace {
 public:
  /// Points are materialized eagerly; throws SetTooLarge above 2^27 points.
  static std::shared_ptr<const ProjectiveSpace> create(const Ring& ring, std::uint32_t d);

  const Ring& ring() const noexcept { return ring_; }
  std::uint32_t dimension() const noexcept { return d_; }
  std::uint32_t level() const noexcept { return ring_.n(); }
  std::uint64_t size() const noexcept { return size_; }

  std::span<const std::uint64_t> canonical(std::uint64_t index) const noexcept {
    return {can_.data() + index * d_, d_};
  }
  std::uint32_t pivot(std::uint64_t index) const noexcept { return pivots_[index]; }

  ProjectivePoint point_at(std::uint64_t index) const;
  std::uint64_t point_index(const ProjectivePoint& point) const;
  std::uint64_t point_index(std::span<const std::uint64_t> canonical) const;

  /// Index (in the level-m space) of the specialization of point `index`.
  std::uint64_t ancestor_index(std::uint64_t index, std::uint32_t m) const;
  /// Indices (at this level) of the points specializing to the level-m
  /// point `index_at_m`: the contiguous range [first, first + count).
  std::uint64_t fiber_begin(std::uint32_t m, std::uint64_t index_at_m) const;
  std::uint64_t fiber_size(std::uint32_t m) const noexcept;

  /// v_n between two points given by index.
  std::uint32_t distance(std::uint64_t a, std::uint64_t b) const noexcept;

  /// Number of points with pivot k at level m (m <= n).
  std::uint64_t block_size(std::uint32_t m, std::uint32_t pivot) const noexcept;
  /// Index of the first point with pivot k at level m.
  std::uint64_t block_offset(std::uint32_t m, std::uint32_t pivot) const noexcept;
  /// Card P^{d-1}(R_m) for m <= n.
  std::uint64_t size_at_level(std::uint32_t m) const noexcept;

 private:
  ProjectiveSpace(const Ring& ring, std::uint32_t d);
  std::vector<std::uint64_t> decode(std::uint64_t index) const;

  Ring ring_;
  std::uint32_t d_;
  std::uint64_t size_;
  std::vector<std::uint64_t> can_;
  std::vector<std::uint32_t> pivots_;
};

/// All points in enumeration order.
std::vector<ProjectivePoint> enumerate_projective(const Ring& ring, std::uint32_t d);

std::uint64_t point_index(const ProjectivePoint& point);
ProjectivePoint point_at(const Ring& ring, std::uint32_t d, std::uint64_t index);

}  // namespace naks
