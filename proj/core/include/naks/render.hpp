#pragma once

// Pictures of Kakeya sets. A level-n coordinate x = sum s_i pi^i is placed
// at the real number sum s_i p^{-i-1}, i.e. at pixel index with the digits
// of x in reverse order.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "naks/kakeya.hpp"
#include "naks/residue_ring.hpp"

namespace naks {

/// Digit reversal of a packed level-n element; an involution on [0, p^n).
std::uint64_t reverse_coord(const Ring& ring, std::uint64_t packed);
std::uint64_t reverse_coord(const RingElement& x);

struct RasterImage {
  std::uint64_t width = 0;
  std::uint64_t height = 0;
  std::vector<std::uint8_t> pixels;  // row-major, 0 = black, 255 = white
  std::uint32_t p = 0;
  std::uint32_t n = 0;
  std::uint32_t d = 0;
  std::optional<std::uint64_t> seed;

  std::uint8_t at(std::uint64_t column, std::uint64_t row) const { return pixels[row * width + column]; }
  std::uint64_t black_count() const;
};

/// Pixel (reverse(x_1), reverse(x_2)) is black iff (x_1, x_2) is in the set.
/// Throws WrongDimension unless d = 2.
RasterImage render_2d(const KakeyaSet& set, std::optional<std::uint64_t> seed = {});

/// Binary PGM with a "# NAKS p=.. n=.. d=.. seed=.." comment line.
void write_pgm(const RasterImage& image, std::ostream& out);
void write_pgm(const RasterImage& image, const std::string& path);

/// "rx,ry,rz" rows of reversed coordinates, sorted. Throws WrongDimension
/// unless d = 3.
void export_voxels(const KakeyaSet& set, std::ostream& out);
void export_voxels(const KakeyaSet& set, const std::string& path);

}  // namespace naks
