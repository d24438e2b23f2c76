#pragma once

// Omega_n: maps f : P^{d-1}(R_n) -> R_n^d with f(a) = f(b) mod m^{v_n(a,b)}.
//
// Maps are dense tables indexed by point index, d packed ring values per
// point. Every such map decomposes uniquely into layers
//
//   f = sum_{i=1..n} pi^(i-1) (g_i o sp_{n,i}),   g_i : P^{d-1}(R_i) -> {0..p-1}^d,
//
// i.e. digit i-1 of f(a) is g_i(sp_{n,i}(a)). Uniform sampling draws each
// layer digit independently; enumeration runs an odometer over them.

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "naks/projective.hpp"
#include "naks/random.hpp"
#include "naks/rational.hpp"

namespace naks {

class OmegaEnumerator;

class LipschitzMap {
 public:
  /// values.size() must be space->size() * d. The congruence is not checked.
  LipschitzMap(std::shared_ptr<const ProjectiveSpace> space, std::vector<std::uint64_t> values);

  static LipschitzMap zero(std::shared_ptr<const ProjectiveSpace> space);

  const std::shared_ptr<const ProjectiveSpace>& space() const noexcept { return space_; }
  const Ring& ring() const noexcept { return space_->ring(); }
  std::uint32_t dimension() const noexcept { return space_->dimension(); }
  std::uint32_t level() const noexcept { return space_->level(); }
  std::uint64_t size() const noexcept { return space_->size(); }

  std::span<const std::uint64_t> value(std::uint64_t index) const noexcept {
    return {values_.data() + index * space_->dimension(), space_->dimension()};
  }
  std::span<const std::uint64_t> values() const noexcept { return values_; }

  bool operator==(const LipschitzMap& other) const noexcept;

 private:
  friend class OmegaEnumerator;
  friend void random_lipschitz_into(const SampleStream&, LipschitzMap&);

  std::shared_ptr<const ProjectiveSpace> space_;
  std::vector<std::uint64_t> values_;
};

/// Layer i (1-based; stored at position i-1) holds Card P^{d-1}(R_i) * d digits.
using LayerDigits = std::vector<std::vector<std::uint32_t>>;

/// Checks the congruence on every unordered pair of points.
bool validate_lipschitz(const LipschitzMap& map);
/// Same answer in linear time: compares each value with the first point of
/// its level-m fibre, for every m.
bool validate_lipschitz_fibres(const LipschitzMap& map);

/// Exactly uniform draw from Omega_n for the given sample stream.
LipschitzMap random_lipschitz(std::shared_ptr<const ProjectiveSpace> space, const SampleStream& stream);
/// Same draw, reusing the table of `map` (whose space selects the level).
void random_lipschitz_into(const SampleStream& stream, LipschitzMap& map);

/// q^{d (q^d-1)/(q-1) (q^{n(d-1)}-1)/(q^{d-1}-1)}.
BigInt omega_cardinality(std::uint64_t q, std::uint32_t d, std::uint32_t n);

inline constexpr std::uint64_t kDefaultEnumerationCap = 1ULL << 24;

/// Visits every element of Omega_n once. The map passed to `visit` is only
/// valid during the call. Throws EnumerationTooLarge when Card Omega_n > cap.
class OmegaEnumerator {
 public:
  explicit OmegaEnumerator(std::shared_ptr<const ProjectiveSpace> space,
                           std::uint64_t cap = kDefaultEnumerationCap);

  std::uint64_t count() const noexcept { return count_; }
  void for_each(const std::function<void(const LipschitzMap&)>& visit);

 private:
  struct Slot {
    std::uint32_t layer;
    std::uint64_t first;
    std::uint64_t span;
    std::uint32_t coordinate;
    std::uint64_t place;
  };

  LipschitzMap map_;
  std::vector<Slot> slots_;
  std::uint64_t count_;
};

void enumerate_omega(std::shared_ptr<const ProjectiveSpace> space,
                     const std::function<void(const LipschitzMap&)>& visit,
                     std::uint64_t cap = kDefaultEnumerationCap);

/// The level-m map through which `map` factors. Throws InvalidLevel.
LipschitzMap project_map(const LipschitzMap& map, std::uint32_t m);

/// Pointwise sum in R_n^d.
LipschitzMap map_add(const LipschitzMap& f, const LipschitzMap& g);

LayerDigits extract_layers(const LipschitzMap& map);
LipschitzMap from_layers(std::shared_ptr<const ProjectiveSpace> space, const LayerDigits& layers);

/// CSV with a "# naks-map ring=<ring> d=<d> seed=<seed>" header line, then
/// rows point_index,point,value_1..value_d.
void write_map_csv(const LipschitzMap& map, std::ostream& out, std::optional<std::uint64_t> seed = {});
/// Throws ParseError on malformed input, InvalidArgument if not 1-Lipschitz.
LipschitzMap read_map_csv(std::istream& in);

}  // namespace naks
