#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace toricheap {

// Growable bitset with value semantics; hashable so it can key orientation
// sets. Sizes in this library stay small (a few hundred bits at most).
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t nbits) : size_(nbits), blocks_((nbits + 63) / 64, 0) {}

  std::size_t size() const noexcept { return size_; }

  bool test(std::size_t i) const noexcept {
    return (blocks_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(std::size_t i, bool value = true) noexcept {
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (value) {
      blocks_[i >> 6] |= mask;
    } else {
      blocks_[i >> 6] &= ~mask;
    }
  }
  void flip(std::size_t i) noexcept { blocks_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  std::size_t count() const noexcept {
    std::size_t n = 0;
    for (auto b : blocks_) n += static_cast<std::size_t>(std::popcount(b));
    return n;
  }
  bool none() const noexcept {
    for (auto b : blocks_) {
      if (b != 0) return false;
    }
    return true;
  }

  Bitset& operator|=(const Bitset& other) noexcept {
    for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] |= other.blocks_[i];
    return *this;
  }
  Bitset& operator&=(const Bitset& other) noexcept {
    for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] &= other.blocks_[i];
    return *this;
  }
  // True iff every bit set here is also set in `other`.
  bool is_subset_of(const Bitset& other) const noexcept {
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
      if ((blocks_[i] & ~other.blocks_[i]) != 0) return false;
    }
    return true;
  }

  friend bool operator==(const Bitset&, const Bitset&) = default;
  friend auto operator<=>(const Bitset& a, const Bitset& b) {
    if (auto c = a.size_ <=> b.size_; c != 0) return c;
    return a.blocks_ <=> b.blocks_;
  }

  std::size_t hash() const noexcept {
    std::size_t h = size_;
    for (auto b : blocks_) h ^= std::hash<std::uint64_t>{}(b) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> blocks_;
};

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const noexcept { return b.hash(); }
};

}  // namespace toricheap
