#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace rainbow {

// Fixed-width bit row over [0, size).  Backs the per-color adjacency rows
// and the used-vertex / used-color masks in the search kernels.
class Bitset {
public:
  Bitset() = default;
  explicit Bitset(int size) : size_(size), words_((size + 63) / 64, 0) {}

  int size() const { return size_; }

  bool test(int i) const {
    assert(i >= 0 && i < size_);
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }

  void set(int i) {
    assert(i >= 0 && i < size_);
    words_[i >> 6] |= std::uint64_t{1} << (i & 63);
  }

  void reset(int i) {
    assert(i >= 0 && i < size_);
    words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }

  void clear() {
    for (auto& w : words_) w = 0;
  }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }

  bool none() const { return !any(); }

  Bitset& operator|=(const Bitset& o) {
    assert(size_ == o.size_);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }

  Bitset& operator&=(const Bitset& o) {
    assert(size_ == o.size_);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }

  // this &= ~o
  Bitset& subtract(const Bitset& o) {
    assert(size_ == o.size_);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
    return *this;
  }

  bool intersects(const Bitset& o) const {
    assert(size_ == o.size_);
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & o.words_[k]) return true;
    return false;
  }

  // Index of the first set bit at position >= from, or -1 when none.
  int next(int from = 0) const {
    if (from < 0) from = 0;
    if (from >= size_) return -1;
    std::size_t k = static_cast<std::size_t>(from) >> 6;
    std::uint64_t w = words_[k] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (w) return static_cast<int>((k << 6) + std::countr_zero(w));
      if (++k == words_.size()) return -1;
      w = words_[k];
    }
  }

  friend bool operator==(const Bitset&, const Bitset&) = default;

private:
  int size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace rainbow
