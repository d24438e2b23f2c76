#include "naks/render.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <ostream>

#include "naks/error.hpp"

namespace naks {

std::uint64_t reverse_coord(const Ring& ring, std::uint64_t packed) {
  std::uint64_t out = 0;
  for (std::uint32_t i = 0; i < ring.n(); ++i) {
    out = out * ring.p() + packed % ring.p();
    packed /= ring.p();
  }
  return out;
}

std::uint64_t reverse_coord(const RingElement& x) { return reverse_coord(x.ring(), x.packed()); }

std::uint64_t RasterImage::black_count() const {
  return static_cast<std::uint64_t>(std::count(pixels.begin(), pixels.end(), std::uint8_t{0}));
}

RasterImage render_2d(const KakeyaSet& set, std::optional<std::uint64_t> seed) {
  if (set.dimension() != 2)
    throw Error(ErrorCode::WrongDimension, "render_2d needs d = 2, got " + std::to_string(set.dimension()));
  const Ring& ring = set.ring();
  const std::uint64_t side = ring.size();
  RasterImage image{side, side, std::vector<std::uint8_t>(side * side, 255), ring.p(), ring.n(), 2, seed};
  for (std::uint64_t cell : set.cells()) {
    const std::uint64_t column = reverse_coord(ring, cell % side);
    const std::uint64_t row = reverse_coord(ring, cell / side);
    image.pixels[row * side + column] = 0;
  }
  return image;
}

void write_pgm(const RasterImage& image, std::ostream& out) {
  out << "P5\n# NAKS p=" << image.p << " n=" << image.n << " d=" << image.d << " seed=";
  if (image.seed)
    out << *image.seed;
  else
    out << "none";
  out << '\n' << image.width << ' ' << image.height << "\n255\n";
  out.write(reinterpret_cast<const char*>(image.pixels.data()), static_cast<std::streamsize>(image.pixels.size()));
}

void write_pgm(const RasterImage& image, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot open " + path);
  write_pgm(image, out);
  if (!out) throw Error(ErrorCode::IoError, "write failed: " + path);
}

void export_voxels(const KakeyaSet& set, std::ostream& out) {
  if (set.dimension() != 3)
    throw Error(ErrorCode::WrongDimension, "export_voxels needs d = 3, got " + std::to_string(set.dimension()));
  const Ring& ring = set.ring();
  const std::uint64_t side = ring.size();
  std::vector<std::array<std::uint64_t, 3>> rows;
  rows.reserve(set.card());
  for (std::uint64_t cell : set.cells())
    rows.push_back({reverse_coord(ring, cell % side), reverse_coord(ring, cell / side % side),
                    reverse_coord(ring, cell / side / side)});
  std::sort(rows.begin(), rows.end());
  out << "rx,ry,rz\n";
  for (const auto& r : rows) out << r[0] << ',' << r[1] << ',' << r[2] << '\n';
}

void export_voxels(const KakeyaSet& set, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::IoError, "cannot open " + path);
  export_voxels(set, out);
  if (!out) throw Error(ErrorCode::IoError, "write failed: " + path);
}

}  // namespace naks
