#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace matchless {

/// A subset of [n] = {1, ..., n}. Element e lives at bit e-1 of the block
/// sequence; blocks beyond the ground set stay zero.
class SubsetWord {
 public:
  static constexpr std::size_t kWordBits = 64;
  static constexpr std::size_t kMaxGround = 1024;
  static constexpr std::size_t kMaxBlocks = kMaxGround / kWordBits;

  /// The empty subset of [n]. Throws RangeError unless 1 <= n <= 1024.
  explicit SubsetWord(std::size_t n);

  static SubsetWord from_elements(std::size_t n, std::span<const std::size_t> elements);
  static SubsetWord from_elements(std::size_t n, std::initializer_list<std::size_t> elements) {
    return from_elements(n, std::span<const std::size_t>(elements.begin(), elements.size()));
  }
  /// Bit i-1 of mask is element i. Requires n <= 64 and no bits above n.
  static SubsetWord from_mask(std::size_t n, std::uint64_t mask);
  /// [lo, hi] as a subset of [n]; empty when lo > hi.
  static SubsetWord interval(std::size_t n, std::size_t lo, std::size_t hi);
  static SubsetWord full(std::size_t n) { return interval(n, 1, n); }

  std::size_t ground_size() const noexcept { return n_; }
  std::size_t blocks() const noexcept { return blocks_; }
  std::uint64_t block(std::size_t b) const noexcept { return bits_[b]; }
  /// Low 64 bits; the whole set when n <= 64.
  std::uint64_t mask() const noexcept { return bits_[0]; }

  std::size_t size() const noexcept {
    std::size_t c = 0;
    for (std::size_t b = 0; b < blocks_; ++b) c += static_cast<std::size_t>(std::popcount(bits_[b]));
    return c;
  }
  bool empty() const noexcept {
    for (std::size_t b = 0; b < blocks_; ++b)
      if (bits_[b]) return false;
    return true;
  }
  bool contains(std::size_t e) const noexcept {
    if (e == 0 || e > n_) return false;
    return (bits_[(e - 1) / kWordBits] >> ((e - 1) % kWordBits)) & 1U;
  }
  void insert(std::size_t e);
  void erase(std::size_t e);

  /// Elements in increasing order, 1-based.
  std::vector<std::size_t> elements() const;
  /// Smallest element, 0 when empty.
  std::size_t min_element() const noexcept;

  bool is_subset_of(const SubsetWord& other) const noexcept {
    for (std::size_t b = 0; b < blocks_; ++b)
      if (bits_[b] & ~other.bits_[b]) return false;
    return true;
  }
  bool is_disjoint(const SubsetWord& other) const noexcept {
    for (std::size_t b = 0; b < blocks_; ++b)
      if (bits_[b] & other.bits_[b]) return false;
    return true;
  }

  SubsetWord operator&(const SubsetWord& o) const noexcept;
  SubsetWord operator|(const SubsetWord& o) const noexcept;
  /// Set difference.
  SubsetWord operator-(const SubsetWord& o) const noexcept;

  /// Same elements viewed inside [n'] (n' >= max element). Throws RangeError.
  SubsetWord rebased(std::size_t new_n) const;

  /// "-" for the empty set, otherwise "1,2,5".
  std::string to_string() const;

  friend bool operator==(const SubsetWord& a, const SubsetWord& b) noexcept {
    if (a.n_ != b.n_) return false;
    for (std::size_t i = 0; i < a.blocks_; ++i)
      if (a.bits_[i] != b.bits_[i]) return false;
    return true;
  }
  /// Canonical order: by size, then by the numeric value of the bit string.
  friend std::strong_ordering operator<=>(const SubsetWord& a, const SubsetWord& b) noexcept;

 private:
  std::uint16_t n_;
  std::uint16_t blocks_;
  std::array<std::uint64_t, kMaxBlocks> bits_{};
};

}  // namespace matchless
