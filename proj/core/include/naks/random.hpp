#pragma once

// Counter-based random digits.
//
// Every digit drawn while sampling a Lipschitz map is a pure function of
// (seed, sample, layer, point, coordinate), so a sample does not depend on
// which worker produced it or in which order. The derivation is fixed:
//
//   k0 = mix(seed + G)          k1 = mix(k0 ^ sample)
//   k2 = mix(k1 ^ (layer << 32 | coordinate))
//   k3 = mix(k2 ^ point)
//   x_a = mix(k3 + a * G)       for attempt a = 0, 1, ...
//
// where mix is the splitmix64 finalizer and G = 0x9e3779b97f4a7c15. The
// digit is floor(x_a * p / 2^64), with Lemire's rejection on the low word
// making it exactly uniform on [0, p).

#include <cstdint>

namespace naks {

constexpr std::uint64_t splitmix64_mix(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

class SampleStream {
 public:
  static constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

  constexpr SampleStream(std::uint64_t seed, std::uint64_t sample) noexcept
      : key_(splitmix64_mix(splitmix64_mix(seed + kGolden) ^ sample)) {}

  /// Uniform digit in [0, p).
  constexpr std::uint32_t digit(std::uint32_t layer, std::uint64_t point, std::uint32_t coordinate,
                                std::uint32_t p) const noexcept {
    const std::uint64_t k2 = splitmix64_mix(key_ ^ ((std::uint64_t{layer} << 32) | coordinate));
    const std::uint64_t k3 = splitmix64_mix(k2 ^ point);
    const std::uint64_t threshold = (0 - std::uint64_t{p}) % p;
    for (std::uint64_t attempt = 0;; ++attempt) {
      const std::uint64_t x = splitmix64_mix(k3 + attempt * kGolden);
      const unsigned __int128 wide = static_cast<unsigned __int128>(x) * p;
      if (static_cast<std::uint64_t>(wide) >= threshold) return static_cast<std::uint32_t>(wide >> 64);
    }
  }

 private:
  std::uint64_t key_;
};

}  // namespace naks
