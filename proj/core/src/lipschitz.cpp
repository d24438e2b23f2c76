#include "naks/lipschitz.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "naks/error.hpp"

namespace naks {

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream stream(line);
  while (std::getline(stream, field, sep)) fields.push_back(field);
  if (!line.empty() && line.back() == sep) fields.emplace_back();
  return fields;
}

std::string header_field(const std::string& header, const std::string& key) {
  const auto pos = header.find(" " + key + "=");
  if (pos == std::string::npos) throw Error(ErrorCode::ParseError, "map header lacks '" + key + "'");
  const auto start = pos + key.size() + 2;
  const auto end = header.find(' ', start);
  return header.substr(start, end == std::string::npos ? std::string::npos : end - start);
}

}  // namespace

LipschitzMap::LipschitzMap(std::shared_ptr<const ProjectiveSpace> space, std::vector<std::uint64_t> values)
    : space_(std::move(space)), values_(std::move(values)) {
  if (!space_) throw Error(ErrorCode::InvalidArgument, "null projective space");
  if (values_.size() != space_->size() * space_->dimension())
    throw Error(ErrorCode::InvalidArgument, "map table has the wrong length");
  for (std::uint64_t v : values_)
    if (v >= space_->ring().size()) throw Error(ErrorCode::InvalidArgument, "map value out of range");
}

LipschitzMap LipschitzMap::zero(std::shared_ptr<const ProjectiveSpace> space) {
  const std::size_t length = space->size() * space->dimension();
  return {std::move(space), std::vector<std::uint64_t>(length, 0)};
}

bool LipschitzMap::operator==(const LipschitzMap& other) const noexcept {
  return space_->ring() == other.space_->ring() && space_->dimension() == other.space_->dimension() &&
         values_ == other.values_;
}

bool validate_lipschitz(const LipschitzMap& map) {
  const auto& space = *map.space();
  const Ring& ring = space.ring();
  const std::uint32_t d = space.dimension();
  for (std::uint64_t a = 0; a < space.size(); ++a) {
    const auto fa = map.value(a);
    for (std::uint64_t b = a + 1; b < space.size(); ++b) {
      const std::uint32_t v = space.distance(a, b);
      if (v == 0) continue;
      const std::uint64_t modulus = ring.radix_power(v);
      const auto fb = map.value(b);
      for (std::uint32_t c = 0; c < d; ++c)
        if (fa[c] % modulus != fb[c] % modulus) return false;
    }
  }
  return true;
}

bool validate_lipschitz_fibres(const LipschitzMap& map) {
  const auto& space = *map.space();
  const Ring& ring = space.ring();
  const std::uint32_t d = space.dimension();
  for (std::uint32_t m = 1; m < space.level(); ++m) {
    const std::uint64_t modulus = ring.radix_power(m);
    for (std::uint64_t a = 0; a < space.size(); ++a) {
      const auto head = map.value(space.fiber_begin(m, space.ancestor_index(a, m)));
      const auto fa = map.value(a);
      for (std::uint32_t c = 0; c < d; ++c)
        if (fa[c] % modulus != head[c] % modulus) return false;
    }
  }
  return true;
}

void random_lipschitz_into(const SampleStream& stream, LipschitzMap& map) {
  const auto& space = *map.space_;
  const Ring& ring = space.ring();
  const std::uint32_t d = space.dimension();
  const std::uint32_t p = ring.p();
  std::fill(map.values_.begin(), map.values_.end(), 0);
  for (std::uint32_t layer = 1; layer <= ring.n(); ++layer) {
    const std::uint64_t place = ring.radix_power(layer - 1);
    const std::uint64_t span = space.fiber_size(layer);
    const std::uint64_t points = space.size_at_level(layer);
    std::uint64_t first = 0;
    for (std::uint64_t j = 0; j < points; ++j, first += span) {
      // Fibres over consecutive level-i points are consecutive blocks.
      for (std::uint32_t c = 0; c < d; ++c) {
        const std::uint64_t delta = std::uint64_t{stream.digit(layer, j, c, p)} * place;
        if (delta == 0) continue;
        for (std::uint64_t a = first; a < first + span; ++a) map.values_[a * d + c] += delta;
      }
    }
  }
}

LipschitzMap random_lipschitz(std::shared_ptr<const ProjectiveSpace> space, const SampleStream& stream) {
  auto map = LipschitzMap::zero(std::move(space));
  random_lipschitz_into(stream, map);
  return map;
}

BigInt omega_cardinality(std::uint64_t q, std::uint32_t d, std::uint32_t n) {
  if (q < 2 || d < 2 || n < 1) throw Error(ErrorCode::InvalidArgument, "need q >= 2, d >= 2, n >= 1");
  // Exponent d * sum_{i=1..n} Card P^{d-1}(R_i).
  BigInt exponent = 0;
  for (std::uint32_t i = 1; i <= n; ++i) exponent += projective_cardinality(q, d, i);
  exponent *= d;
  if (!exponent.fits_ulong_p()) throw Error(ErrorCode::InvalidArgument, "cardinality exponent too large");
  return pow(BigInt(static_cast<unsigned long>(q)), exponent.get_ui());
}

OmegaEnumerator::OmegaEnumerator(std::shared_ptr<const ProjectiveSpace> space, std::uint64_t cap)
    : map_(LipschitzMap::zero(space)), count_(0) {
  const Ring& ring = space->ring();
  const BigInt card = omega_cardinality(ring.p(), space->dimension(), ring.n());
  if (card > BigInt(static_cast<unsigned long>(cap)))
    throw Error(ErrorCode::EnumerationTooLarge,
                "Card Omega_n = " + card.get_str() + " exceeds the cap " + std::to_string(cap));
  count_ = card.get_ui();
  for (std::uint32_t layer = 1; layer <= ring.n(); ++layer) {
    const std::uint64_t span = space->fiber_size(layer);
    for (std::uint64_t j = 0; j < space->size_at_level(layer); ++j)
      for (std::uint32_t c = 0; c < space->dimension(); ++c)
        slots_.push_back({layer, j * span, span, c, ring.radix_power(layer - 1)});
  }
}

void OmegaEnumerator::for_each(const std::function<void(const LipschitzMap&)>& visit) {
  const std::uint32_t p = map_.ring().p();
  const std::uint32_t d = map_.dimension();
  std::fill(map_.values_.begin(), map_.values_.end(), 0);
  std::vector<std::uint32_t> digits(slots_.size(), 0);
  while (true) {
    visit(map_);
    std::size_t s = 0;
    for (; s < slots_.size(); ++s) {
      const Slot& slot = slots_[s];
      const bool wraps = digits[s] + 1 == p;
      // Increment adds one unit of the slot's place; wrapping removes p-1.
      for (std::uint64_t a = slot.first; a < slot.first + slot.span; ++a) {
        auto& value = map_.values_[a * d + slot.coordinate];
        value = wraps ? value - (p - 1) * slot.place : value + slot.place;
      }
      if (!wraps) {
        ++digits[s];
        break;
      }
      digits[s] = 0;
    }
    if (s == slots_.size()) return;
  }
}

void enumerate_omega(std::shared_ptr<const ProjectiveSpace> space,
                     const std::function<void(const LipschitzMap&)>& visit, std::uint64_t cap) {
  OmegaEnumerator(std::move(space), cap).for_each(visit);
}

LipschitzMap project_map(const LipschitzMap& map, std::uint32_t m) {
  const auto& space = *map.space();
  if (m < 1 || m > space.level())
    throw Error(ErrorCode::InvalidLevel, "cannot project level " + std::to_string(space.level()) + " to " + std::to_string(m));
  if (m == space.level()) return map;
  auto coarse = ProjectiveSpace::create(space.ring().at_level(m), space.dimension());
  const std::uint32_t d = space.dimension();
  std::vector<std::uint64_t> values(coarse->size() * d);
  for (std::uint64_t j = 0; j < coarse->size(); ++j) {
    const auto fine = map.value(space.fiber_begin(m, j));
    for (std::uint32_t c = 0; c < d; ++c) values[j * d + c] = space.ring().reduce(fine[c], m);
  }
  return {std::move(coarse), std::move(values)};
}

LipschitzMap map_add(const LipschitzMap& f, const LipschitzMap& g) {
  if (!(f.ring() == g.ring()) || f.dimension() != g.dimension())
    throw Error(ErrorCode::MixedRings, "maps on different spaces");
  std::vector<std::uint64_t> values(f.values().size());
  for (std::size_t i = 0; i < values.size(); ++i) values[i] = f.ring().add(f.values()[i], g.values()[i]);
  return {f.space(), std::move(values)};
}

LayerDigits extract_layers(const LipschitzMap& map) {
  const auto& space = *map.space();
  const Ring& ring = space.ring();
  const std::uint32_t d = space.dimension();
  LayerDigits layers(ring.n());
  for (std::uint32_t layer = 1; layer <= ring.n(); ++layer) {
    auto& digits = layers[layer - 1];
    digits.resize(space.size_at_level(layer) * d);
    const std::uint64_t place = ring.radix_power(layer - 1);
    for (std::uint64_t j = 0; j < space.size_at_level(layer); ++j) {
      const auto value = map.value(space.fiber_begin(layer, j));
      for (std::uint32_t c = 0; c < d; ++c) digits[j * d + c] = static_cast<std::uint32_t>(value[c] / place % ring.p());
    }
  }
  return layers;
}

LipschitzMap from_layers(std::shared_ptr<const ProjectiveSpace> space, const LayerDigits& layers) {
  const Ring& ring = space->ring();
  const std::uint32_t d = space->dimension();
  if (layers.size() != ring.n()) throw Error(ErrorCode::InvalidArgument, "wrong number of layers");
  std::vector<std::uint64_t> values(space->size() * d, 0);
  for (std::uint32_t layer = 1; layer <= ring.n(); ++layer) {
    const auto& digits = layers[layer - 1];
    if (digits.size() != space->size_at_level(layer) * d)
      throw Error(ErrorCode::InvalidArgument, "layer " + std::to_string(layer) + " has the wrong length");
    const std::uint64_t place = ring.radix_power(layer - 1);
    for (std::uint64_t a = 0; a < space->size(); ++a) {
      const std::uint64_t j = space->ancestor_index(a, layer);
      for (std::uint32_t c = 0; c < d; ++c) {
        if (digits[j * d + c] >= ring.p()) throw Error(ErrorCode::InvalidArgument, "layer digit out of range");
        values[a * d + c] += digits[j * d + c] * place;
      }
    }
  }
  return {std::move(space), std::move(values)};
}

void write_map_csv(const LipschitzMap& map, std::ostream& out, std::optional<std::uint64_t> seed) {
  const auto& space = *map.space();
  out << "# naks-map ring=" << space.ring().to_string() << " d=" << space.dimension()
      << " seed=" << (seed ? std::to_string(*seed) : std::string("none")) << '\n';
  out << "point_index,point";
  for (std::uint32_t c = 1; c <= space.dimension(); ++c) out << ",value_" << c;
  out << '\n';
  for (std::uint64_t i = 0; i < space.size(); ++i) {
    out << i << ',' << space.point_at(i).to_string();
    for (std::uint64_t v : map.value(i)) out << ',' << space.ring().format(v);
    out << '\n';
  }
}

LipschitzMap read_map_csv(std::istream& in) {
  std::string header;
  if (!std::getline(in, header) || header.rfind("# naks-map", 0) != 0)
    throw Error(ErrorCode::ParseError, "missing '# naks-map' header");
  const Ring ring = Ring::parse(header_field(header, "ring"));
  const auto d = static_cast<std::uint32_t>(std::stoul(header_field(header, "d")));
  auto space = ProjectiveSpace::create(ring, d);

  std::string line;
  std::getline(in, line);  // column names
  std::vector<std::uint64_t> values(space->size() * d);
  std::uint64_t rows = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto fields = split(line, ',');
    if (fields.size() != d + 2) throw Error(ErrorCode::ParseError, "bad row '" + line + "'");
    const std::uint64_t index = std::stoull(fields[0]);
    if (index >= space->size()) throw Error(ErrorCode::IndexOutOfRange, "row index " + fields[0]);
    if (space->point_index(ProjectivePoint::parse(ring, fields[1])) != index)
      throw Error(ErrorCode::ParseError, "point does not match its index in row '" + line + "'");
    for (std::uint32_t c = 0; c < d; ++c) values[index * d + c] = ring.parse_value(fields[c + 2]);
    ++rows;
  }
  if (rows != space->size()) throw Error(ErrorCode::ParseError, "map table is incomplete");
  LipschitzMap map(std::move(space), std::move(values));
  if (!validate_lipschitz_fibres(map)) throw Error(ErrorCode::InvalidArgument, "map is not 1-Lipschitz");
  return map;
}

}  // namespace naks
