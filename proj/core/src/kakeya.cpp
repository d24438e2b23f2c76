#include "naks/kakeya.hpp"

#include <algorithm>
#include <array>
#include <iterator>
#include <istream>
#include <ostream>

#include "naks/error.hpp"

namespace naks {

namespace {

constexpr std::array<char, 4> kMagic = {'N', 'A', 'K', 'S'};

template <typename T>
void put_le(std::ostream& out, T value) {
  for (std::size_t i = 0; i < sizeof(T); ++i) out.put(static_cast<char>((static_cast<std::uint64_t>(value) >> (8 * i)) & 0xff));
}

template <typename T>
T get_le(std::istream& in) {
  std::uint64_t value = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    const int byte = in.get();
    if (byte == EOF) throw Error(ErrorCode::ParseError, "truncated NAKS header");
    value |= static_cast<std::uint64_t>(byte) << (8 * i);
  }
  return static_cast<T>(value);
}

std::vector<std::uint64_t> scaled_direction(const Ring& ring, const ProjectivePoint& direction, std::uint64_t t) {
  std::vector<std::uint64_t> out;
  out.reserve(direction.dimension());
  for (std::uint64_t c : direction.canonical()) out.push_back(ring.mul(t, c));
  return out;
}

}  // namespace

std::uint64_t cell_count(const Ring& ring, std::uint32_t d, std::uint64_t memory_cap) {
  std::uint64_t cells = 1;
  const std::uint64_t max_cells = memory_cap > (~std::uint64_t{0} >> 3) ? ~std::uint64_t{0} : memory_cap * 8;
  for (std::uint32_t i = 0; i < d; ++i) {
    if (cells > max_cells / ring.size())
      throw Error(ErrorCode::SetTooLarge, "R_n^d with " + ring.to_string() + ", d = " + std::to_string(d) +
                                              " exceeds the memory cap of " + std::to_string(memory_cap) + " bytes");
    cells *= ring.size();
  }
  return cells;
}

std::uint64_t encode_cell(const Ring& ring, std::span<const std::uint64_t> coords) {
  std::uint64_t cell = 0;
  for (std::size_t i = coords.size(); i-- > 0;) {
    if (coords[i] >= ring.size()) throw Error(ErrorCode::InvalidArgument, "coordinate out of range");
    cell = cell * ring.size() + coords[i];
  }
  return cell;
}

std::vector<std::uint64_t> decode_cell(const Ring& ring, std::uint32_t d, std::uint64_t cell) {
  std::vector<std::uint64_t> coords(d);
  for (std::uint32_t i = 0; i < d; ++i) {
    coords[i] = cell % ring.size();
    cell /= ring.size();
  }
  return coords;
}

KakeyaSet::KakeyaSet(const Ring& ring, std::uint32_t d, BitArray bits)
    : ring_(ring), d_(d), bits_(std::move(bits)), card_(0) {
  if (bits_.size() != cell_count(ring_, d_, ~std::uint64_t{0} >> 4))
    throw Error(ErrorCode::InvalidArgument, "bit array size does not match p^{nd}");
  card_ = bits_.count();
}

std::vector<std::uint64_t> KakeyaSet::cells() const {
  std::vector<std::uint64_t> out;
  out.reserve(card_);
  const auto words = bits_.words();
  for (std::size_t w = 0; w < words.size(); ++w)
    for (std::uint64_t bits = words[w]; bits != 0; bits &= bits - 1)
      out.push_back(w * 64 + static_cast<std::uint64_t>(std::countr_zero(bits)));
  return out;
}

KakeyaBuilder::KakeyaBuilder(std::shared_ptr<const ProjectiveSpace> space, std::uint64_t memory_cap)
    : space_(std::move(space)) {
  const Ring& ring = space_->ring();
  const std::uint32_t d = space_->dimension();
  bits_ = BitArray(cell_count(ring, d, memory_cap));
  strides_.resize(d);
  std::uint64_t stride = 1;
  for (std::uint32_t i = 0; i < d; ++i, stride *= ring.size()) strides_[i] = stride;
  steps_.resize(std::size_t{ring.n()} * d);
  point_.resize(d);
}

std::uint64_t KakeyaBuilder::build(const LipschitzMap& map) {
  if (!(map.ring() == space_->ring()) || map.dimension() != space_->dimension())
    throw Error(ErrorCode::MixedRings, "map does not live on the builder's space");
  const Ring& ring = space_->ring();
  const std::uint32_t d = space_->dimension();
  const std::uint32_t n = ring.n();
  const std::uint32_t p = ring.p();
  const std::uint64_t size = ring.size();
  std::uint64_t* words = bits_.words().data();
  bits_.clear();

  auto mark = [&] {
    std::uint64_t cell = 0;
    for (std::uint32_t i = 0; i < d; ++i) cell += point_[i] * strides_[i];
    words[cell >> 6] |= std::uint64_t{1} << (cell & 63);
  };

  for (std::uint64_t a = 0; a < space_->size(); ++a) {
    const auto can = space_->canonical(a);
    const auto base = map.value(a);
    std::copy(base.begin(), base.end(), point_.begin());

    if (ring.family() == Family::padic) {
      // t -> t + 1 always adds can(a).
      for (std::uint64_t t = 0; t < size; ++t) {
        mark();
        for (std::uint32_t i = 0; i < d; ++i) {
          const std::uint64_t next = point_[i] + can[i];
          point_[i] = next >= size ? next - size : next;
        }
      }
      continue;
    }

    // Series family: stepping t -> t + 1 with k trailing digits equal to p-1
    // changes t can(a) by sum_{j <= k} pi^j can(a), since p * x = 0.
    for (std::uint32_t k = 0; k < n; ++k)
      for (std::uint32_t i = 0; i < d; ++i) {
        const std::uint64_t term = ring.shift(can[i], k);
        steps_[k * d + i] = k == 0 ? term : ring.add(steps_[(k - 1) * d + i], term);
      }
    if (p == 2) {
      for (std::uint64_t t = 0; t < size; ++t) {
        mark();
        const auto k = static_cast<std::uint32_t>(std::countr_zero(t + 1));
        if (k >= n) break;
        for (std::uint32_t i = 0; i < d; ++i) point_[i] ^= steps_[k * d + i];
      }
    } else {
      for (std::uint64_t t = 0; t < size; ++t) {
        mark();
        std::uint32_t k = 0;
        for (std::uint64_t next = t + 1; next % p == 0; next /= p) ++k;
        if (k >= n) break;
        for (std::uint32_t i = 0; i < d; ++i) point_[i] = ring.add(point_[i], steps_[k * d + i]);
      }
    }
  }
  return bits_.count();
}

KakeyaSet KakeyaBuilder::snapshot() const { return {space_->ring(), space_->dimension(), bits_}; }

KakeyaSet build_kakeya(const LipschitzMap& map, std::uint64_t memory_cap) {
  KakeyaBuilder builder(map.space(), memory_cap);
  builder.build(map);
  return builder.snapshot();
}

Rational measure(const KakeyaSet& set) {
  const BigInt cells = pow(BigInt(static_cast<unsigned long>(set.ring().size())), set.dimension());
  return ratio(BigInt(static_cast<unsigned long>(set.card())), cells);
}

std::vector<std::uint64_t> segment(const ProjectivePoint& direction, std::span<const std::uint64_t> base,
                                   std::uint32_t ell) {
  const Ring& ring = direction.ring();
  if (ell > ring.n()) throw Error(ErrorCode::InvalidLevel, "segment length exponent exceeds n");
  if (base.size() != direction.dimension()) throw Error(ErrorCode::WrongDimension, "base dimension mismatch");
  const std::uint64_t count = ring.radix_power(ring.n() - ell);
  std::vector<std::uint64_t> cells;
  cells.reserve(count);
  std::vector<std::uint64_t> point(base.size());
  for (std::uint64_t s = 0; s < count; ++s) {
    const auto scaled = scaled_direction(ring, direction, ring.shift(s, ell));
    for (std::size_t i = 0; i < point.size(); ++i) point[i] = ring.add(scaled[i], base[i]);
    cells.push_back(encode_cell(ring, point));
  }
  return cells;
}

std::uint64_t segment_intersection_card(const ProjectivePoint& a, std::span<const std::uint64_t> base_a,
                                        const ProjectivePoint& b, std::span<const std::uint64_t> base_b,
                                        std::uint32_t ell) {
  if (a.ring() != b.ring() || a.dimension() != b.dimension())
    throw Error(ErrorCode::MixedRings, "directions from different spaces");
  if (a == b) throw Error(ErrorCode::InvalidArgument, "directions must be distinct");
  auto sa = segment(a, base_a, ell);
  auto sb = segment(b, base_b, ell);
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  std::vector<std::uint64_t> common;
  std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(common));
  return common.size();
}

std::uint64_t intersection_card_C_A(const LipschitzMap& map, std::span<const std::uint64_t> subset) {
  if (subset.empty()) throw Error(ErrorCode::EmptySubset, "C_A needs a nonempty subset");
  const auto& space = *map.space();
  const Ring& ring = space.ring();
  const std::uint32_t d = space.dimension();
  for (std::uint64_t a : subset)
    if (a >= space.size()) throw Error(ErrorCode::IndexOutOfRange, "subset index " + std::to_string(a));

  // All unit segments have p^n points: walk the first, test the rest.
  auto on_segment = [&](std::uint64_t b, std::span<const std::uint64_t> x) {
    const auto can = space.canonical(b);
    const auto base = map.value(b);
    const std::uint64_t t = ring.sub(x[space.pivot(b)], base[space.pivot(b)]);
    for (std::uint32_t i = 0; i < d; ++i)
      if (ring.add(ring.mul(t, can[i]), base[i]) != x[i]) return false;
    return true;
  };

  const std::uint64_t first = subset.front();
  const auto can = space.canonical(first);
  const auto base = map.value(first);
  std::vector<std::uint64_t> x(d);
  std::uint64_t count = 0;
  for (std::uint64_t t = 0; t < ring.size(); ++t) {
    for (std::uint32_t i = 0; i < d; ++i) x[i] = ring.add(ring.mul(t, can[i]), base[i]);
    if (std::all_of(subset.begin() + 1, subset.end(), [&](std::uint64_t b) { return on_segment(b, x); })) ++count;
  }
  return count;
}

void write_set(const KakeyaSet& set, std::ostream& out) {
  out.write(kMagic.data(), kMagic.size());
  put_le<std::uint32_t>(out, set.ring().p());
  put_le<std::uint16_t>(out, static_cast<std::uint16_t>(set.ring().n()));
  put_le<std::uint16_t>(out, static_cast<std::uint16_t>(set.dimension()));
  put_le<std::uint8_t>(out, static_cast<std::uint8_t>(set.ring().family()));
  put_le<std::uint8_t>(out, 0);
  put_le<std::uint16_t>(out, 0);
  const std::uint64_t bytes = (set.bits().size() + 7) / 8;
  const auto words = set.bits().words();
  for (std::uint64_t i = 0; i < bytes; ++i) out.put(static_cast<char>((words[i / 8] >> (8 * (i % 8))) & 0xff));
  if (!out) throw Error(ErrorCode::IoError, "failed to write NAKS set");
}

KakeyaSet read_set(std::istream& in) {
  std::array<char, 4> magic{};
  in.read(magic.data(), magic.size());
  if (!in || magic != kMagic) throw Error(ErrorCode::ParseError, "not a NAKS set file");
  const auto p = get_le<std::uint32_t>(in);
  const auto n = get_le<std::uint16_t>(in);
  const auto d = get_le<std::uint16_t>(in);
  const auto family = get_le<std::uint8_t>(in);
  const auto bit_order = get_le<std::uint8_t>(in);
  get_le<std::uint16_t>(in);
  if (family > 1) throw Error(ErrorCode::ParseError, "unknown ring family tag");
  if (bit_order != 0) throw Error(ErrorCode::ParseError, "unsupported bit order");
  const Ring ring = Ring::make(static_cast<Family>(family), p, n);
  BitArray bits(cell_count(ring, d));
  const std::uint64_t bytes = (bits.size() + 7) / 8;
  auto words = bits.words();
  for (std::uint64_t i = 0; i < bytes; ++i) {
    const int byte = in.get();
    if (byte == EOF) throw Error(ErrorCode::ParseError, "truncated NAKS payload");
    words[i / 8] |= static_cast<std::uint64_t>(byte) << (8 * (i % 8));
  }
  if (bits.size() % 64 != 0 && !words.empty() && (words.back() >> (bits.size() % 64)) != 0)
    throw Error(ErrorCode::ParseError, "padding bits set in NAKS payload");
  return {ring, d, std::move(bits)};
}

void write_set_points_csv(const KakeyaSet& set, std::ostream& out) {
  for (std::uint32_t i = 1; i <= set.dimension(); ++i) out << (i > 1 ? "," : "") << "x_" << i;
  out << '\n';
  for (std::uint64_t cell : set.cells()) {
    const auto coords = decode_cell(set.ring(), set.dimension(), cell);
    for (std::size_t i = 0; i < coords.size(); ++i) out << (i ? "," : "") << set.ring().format(coords[i]);
    out << '\n';
  }
}

}  // namespace naks
