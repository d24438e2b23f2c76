#include "naks/projective.hpp"

#include <algorithm>

#include "naks/error.hpp"

namespace naks {

namespace {

constexpr std::uint64_t kMaxPoints = 1ULL << 27;

std::uint64_t int_pow(std::uint64_t base, std::uint64_t exponent) {
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < exponent; ++i) result *= base;
  return result;
}

std::uint32_t find_pivot(const Ring& ring, std::span<const std::uint64_t> vector) {
  for (std::uint32_t i = 0; i < vector.size(); ++i)
    if (ring.is_unit(vector[i])) return i;
  throw Error(ErrorCode::NotOnSphere, "no coordinate is a unit");
}

std::uint32_t digit_at(std::uint64_t value, std::uint32_t p, std::uint32_t layer) {
  for (std::uint32_t i = 0; i < layer; ++i) value /= p;
  return static_cast<std::uint32_t>(value % p);
}

}  // namespace

ProjectivePoint::ProjectivePoint(const Ring& ring, std::vector<std::uint64_t> canonical)
    : ring_(ring), can_(std::move(canonical)), pivot_(0) {
  if (can_.size() < 2) throw Error(ErrorCode::WrongDimension, "projective points need d >= 2");
  for (std::uint64_t c : can_)
    if (c >= ring_.size()) throw Error(ErrorCode::InvalidArgument, "coordinate out of range");
  pivot_ = find_pivot(ring_, can_);
  if (can_[pivot_] != 1) throw Error(ErrorCode::InvalidArgument, "representative is not canonical");
}

std::string ProjectivePoint::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < can_.size(); ++i) {
    if (i) out += ':';
    out += ring_.format(can_[i]);
  }
  out += "]@" + std::to_string(ring_.n());
  return out;
}

ProjectivePoint ProjectivePoint::parse(const Ring& ring, std::string_view text) {
  const auto close = text.find(']');
  if (text.empty() || text.front() != '[' || close == std::string_view::npos || text.substr(close, 2) != "]@")
    throw Error(ErrorCode::ParseError, "expected '[c_1:...:c_d]@n', got '" + std::string(text) + "'");
  if (std::to_string(ring.n()) != text.substr(close + 2))
    throw Error(ErrorCode::ParseError, "level suffix does not match " + ring.to_string());
  std::vector<std::uint64_t> coords;
  std::string_view body = text.substr(1, close - 1);
  while (true) {
    const auto colon = body.find(':');
    coords.push_back(ring.parse_value(body.substr(0, colon)));
    if (colon == std::string_view::npos) break;
    body.remove_prefix(colon + 1);
  }
  return {ring, std::move(coords)};
}

std::strong_ordering ProjectivePoint::operator<=>(const ProjectivePoint& other) const {
  if (ring_ != other.ring_ || can_.size() != other.can_.size())
    throw Error(ErrorCode::MixedRings, "points from different projective spaces");
  if (pivot_ != other.pivot_) return pivot_ <=> other.pivot_;
  for (std::uint32_t layer = 0; layer < ring_.n(); ++layer)
    for (std::size_t c = 0; c < can_.size(); ++c) {
      const auto lhs = digit_at(can_[c], ring_.p(), layer);
      const auto rhs = digit_at(other.can_[c], ring_.p(), layer);
      if (lhs != rhs) return lhs <=> rhs;
    }
  return std::strong_ordering::equal;
}

ProjectivePoint canonicalize(const Ring& ring, std::span<const std::uint64_t> vector) {
  for (std::uint64_t c : vector)
    if (c >= ring.size()) throw Error(ErrorCode::InvalidArgument, "coordinate out of range");
  const std::uint32_t pivot = find_pivot(ring, vector);
  const std::uint64_t scale = ring.inverse(vector[pivot]);
  std::vector<std::uint64_t> can(vector.size());
  std::transform(vector.begin(), vector.end(), can.begin(), [&](std::uint64_t x) { return ring.mul(x, scale); });
  return {ring, std::move(can)};
}

ProjectivePoint canonicalize(std::span<const RingElement> vector) {
  if (vector.empty()) throw Error(ErrorCode::WrongDimension, "empty vector");
  std::vector<std::uint64_t> packed;
  packed.reserve(vector.size());
  for (const auto& x : vector) {
    if (x.ring() != vector.front().ring()) throw Error(ErrorCode::MixedRings, "coordinates from different rings");
    packed.push_back(x.packed());
  }
  return canonicalize(vector.front().ring(), packed);
}

BigInt projective_cardinality(std::uint64_t q, std::uint32_t d, std::uint32_t n) {
  if (q < 2 || d < 2 || n < 1) throw Error(ErrorCode::InvalidArgument, "need q >= 2, d >= 2, n >= 1");
  return pow(BigInt(static_cast<unsigned long>(q)), std::uint64_t{d - 1} * (n - 1)) * projective_line_count(q, d);
}

ProjectivePoint specialize(const ProjectivePoint& point, std::uint32_t m) {
  const Ring& ring = point.ring();
  if (m < 1 || m > ring.n())
    throw Error(ErrorCode::InvalidLevel, "cannot specialize level " + std::to_string(ring.n()) + " to " + std::to_string(m));
  std::vector<std::uint64_t> reduced;
  reduced.reserve(point.dimension());
  for (std::uint64_t c : point.canonical()) reduced.push_back(ring.reduce(c, m));
  return {ring.at_level(m), std::move(reduced)};
}

std::uint32_t valuation_distance(const ProjectivePoint& a, const ProjectivePoint& b) {
  if (a.ring() != b.ring() || a.dimension() != b.dimension())
    throw Error(ErrorCode::MixedRings, "points from different projective spaces");
  if (a.pivot() != b.pivot()) return 0;
  const Ring& ring = a.ring();
  std::uint32_t v = ring.n();
  for (std::uint32_t i = 0; i < a.dimension(); ++i)
    v = std::min(v, ring.valuation(ring.sub(b.canonical()[i], a.canonical()[i])));
  return v;
}

ProjectiveSpace::ProjectiveSpace(const Ring& ring, std::uint32_t d) : ring_(ring), d_(d), size_(0) {}

std::shared_ptr<const ProjectiveSpace> ProjectiveSpace::create(const Ring& ring, std::uint32_t d) {
  if (d < 2) throw Error(ErrorCode::WrongDimension, "projective spaces need d >= 2");
  const BigInt card = projective_cardinality(ring.p(), d, ring.n());
  if (card > BigInt(static_cast<unsigned long>(kMaxPoints)))
    throw Error(ErrorCode::SetTooLarge, "P^{d-1}(R_n) has " + card.get_str() + " points");

  std::shared_ptr<ProjectiveSpace> space(new ProjectiveSpace(ring, d));
  space->size_ = card.get_ui();
  space->can_.resize(space->size_ * d);
  space->pivots_.resize(space->size_);
  for (std::uint64_t index = 0; index < space->size_; ++index) {
    const auto can = space->decode(index);
    std::copy(can.begin(), can.end(), space->can_.begin() + static_cast<std::ptrdiff_t>(index * d));
    space->pivots_[index] = find_pivot(ring, can);
  }
  return space;
}

std::uint64_t ProjectiveSpace::block_size(std::uint32_t m, std::uint32_t pivot) const noexcept {
  return int_pow(ring_.p(), std::uint64_t{d_ - 1 - pivot} + std::uint64_t{d_ - 1} * (m - 1));
}

std::uint64_t ProjectiveSpace::block_offset(std::uint32_t m, std::uint32_t pivot) const noexcept {
  std::uint64_t offset = 0;
  for (std::uint32_t k = 0; k < pivot; ++k) offset += block_size(m, k);
  return offset;
}

std::uint64_t ProjectiveSpace::size_at_level(std::uint32_t m) const noexcept { return block_offset(m, d_); }

std::uint64_t ProjectiveSpace::fiber_size(std::uint32_t m) const noexcept {
  return int_pow(ring_.p(), std::uint64_t{d_ - 1} * (ring_.n() - m));
}

std::vector<std::uint64_t> ProjectiveSpace::decode(std::uint64_t index) const {
  const std::uint32_t n = ring_.n();
  const std::uint32_t p = ring_.p();
  std::uint32_t pivot = 0;
  while (index >= block_size(n, pivot)) index -= block_size(n, pivot++);

  // Free digits, least significant first: deepest layer, last coordinate.
  std::vector<std::uint64_t> can(d_, 0);
  for (std::uint32_t layer = n; layer-- > 1;) {
    const std::uint64_t place = ring_.radix_power(layer);
    for (std::uint32_t c = d_; c-- > 0;) {
      if (c == pivot) continue;
      can[c] += (index % p) * place;
      index /= p;
    }
  }
  for (std::uint32_t c = d_; c-- > pivot + 1;) {
    can[c] += index % p;
    index /= p;
  }
  can[pivot] = 1;
  return can;
}

ProjectivePoint ProjectiveSpace::point_at(std::uint64_t index) const {
  if (index >= size_)
    throw Error(ErrorCode::IndexOutOfRange, std::to_string(index) + " >= " + std::to_string(size_));
  const auto can = canonical(index);
  return {ring_, std::vector<std::uint64_t>(can.begin(), can.end())};
}

std::uint64_t ProjectiveSpace::point_index(std::span<const std::uint64_t> can) const {
  if (can.size() != d_) throw Error(ErrorCode::WrongDimension, "dimension mismatch");
  const std::uint32_t n = ring_.n();
  const std::uint32_t p = ring_.p();
  const std::uint32_t pivot = find_pivot(ring_, can);
  if (can[pivot] != 1) throw Error(ErrorCode::InvalidArgument, "representative is not canonical");
  std::uint64_t rel = 0;
  for (std::uint32_t c = pivot + 1; c < d_; ++c) rel = rel * p + can[c] % p;
  for (std::uint32_t layer = 1; layer < n; ++layer)
    for (std::uint32_t c = 0; c < d_; ++c)
      if (c != pivot) rel = rel * p + digit_at(can[c], p, layer);
  return block_offset(n, pivot) + rel;
}

std::uint64_t ProjectiveSpace::point_index(const ProjectivePoint& point) const {
  if (point.ring() != ring_ || point.dimension() != d_)
    throw Error(ErrorCode::MixedRings, "point does not belong to this space");
  return point_index(point.canonical());
}

std::uint64_t ProjectiveSpace::ancestor_index(std::uint64_t index, std::uint32_t m) const {
  if (m < 1 || m > ring_.n()) throw Error(ErrorCode::InvalidLevel, "ancestor level out of range");
  const std::uint32_t pivot = pivots_[index];
  const std::uint64_t rel = index - block_offset(ring_.n(), pivot);
  return block_offset(m, pivot) + rel / fiber_size(m);
}

std::uint64_t ProjectiveSpace::fiber_begin(std::uint32_t m, std::uint64_t index_at_m) const {
  if (m < 1 || m > ring_.n()) throw Error(ErrorCode::InvalidLevel, "fiber level out of range");
  if (index_at_m >= size_at_level(m)) throw Error(ErrorCode::IndexOutOfRange, "no such point at level m");
  std::uint32_t pivot = 0;
  while (index_at_m >= block_offset(m, pivot + 1)) ++pivot;
  const std::uint64_t rel = index_at_m - block_offset(m, pivot);
  return block_offset(ring_.n(), pivot) + rel * fiber_size(m);
}

std::uint32_t ProjectiveSpace::distance(std::uint64_t a, std::uint64_t b) const noexcept {
  if (pivots_[a] != pivots_[b]) return 0;
  std::uint32_t v = ring_.n();
  const auto ca = canonical(a);
  const auto cb = canonical(b);
  for (std::uint32_t i = 0; i < d_; ++i) v = std::min(v, ring_.valuation(ring_.sub(cb[i], ca[i])));
  return v;
}

std::vector<ProjectivePoint> enumerate_projective(const Ring& ring, std::uint32_t d) {
  const auto space = ProjectiveSpace::create(ring, d);
  std::vector<ProjectivePoint> points;
  points.reserve(space->size());
  for (std::uint64_t i = 0; i < space->size(); ++i) points.push_back(space->point_at(i));
  return points;
}

std::uint64_t point_index(const ProjectivePoint& point) {
  return ProjectiveSpace::create(point.ring(), point.dimension())->point_index(point);
}

ProjectivePoint point_at(const Ring& ring, std::uint32_t d, std::uint64_t index) {
  return ProjectiveSpace::create(ring, d)->point_at(index);
}

}  // namespace naks
