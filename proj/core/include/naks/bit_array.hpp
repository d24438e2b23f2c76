#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace naks {

/// Fixed-size dense bit array over 64-bit words, least significant bit first.
class BitArray {
 public:
  BitArray() = default;
  explicit BitArray(std::uint64_t size) : words_((size + 63) / 64, 0), size_(size) {}

  std::uint64_t size() const noexcept { return size_; }

  void set(std::uint64_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  bool test(std::uint64_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void clear() noexcept { std::fill(words_.begin(), words_.end(), 0); }

  std::uint64_t count() const noexcept {
    std::uint64_t total = 0;
    for (std::uint64_t w : words_) total += static_cast<std::uint64_t>(std::popcount(w));
    return total;
  }

  std::span<const std::uint64_t> words() const noexcept { return words_; }
  std::span<std::uint64_t> words() noexcept { return words_; }

  bool operator==(const BitArray&) const noexcept = default;

 private:
  std::vector<std::uint64_t> words_;
  std::uint64_t size_ = 0;
};

}  // namespace naks
