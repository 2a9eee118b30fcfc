#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace lmd {

/// Fixed-capacity set of indices in [0, size()), packed into 64-bit words.
/// Bits at positions >= size() are always zero; every operation preserves
/// that invariant, so word-wise XOR/AND/OR and popcount are exact.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  static Bitset from_indices(std::size_t size, std::initializer_list<std::size_t> indices) {
    Bitset b(size);
    for (std::size_t i : indices) b.set(i);
    return b;
  }

  /// Builds from the low bits of a single machine word (size <= 64).
  static Bitset from_word(std::size_t size, std::uint64_t mask) {
    assert(size <= 64);
    Bitset b(size);
    if (size > 0) b.words_[0] = mask & tail_mask(size);
    return b;
  }

  std::size_t size() const { return size_; }

  bool test(std::size_t i) const {
    assert(i < size_);
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }

  Bitset& set(std::size_t i) {
    assert(i < size_);
    words_[i >> 6] |= std::uint64_t{1} << (i & 63);
    return *this;
  }

  Bitset& reset(std::size_t i) {
    assert(i < size_);
    words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    return *this;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool any() const {
    for (std::uint64_t w : words_)
      if (w) return true;
    return false;
  }

  bool none() const { return !any(); }

  Bitset& operator^=(const Bitset& o) {
    assert(size_ == o.size_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
  }

  Bitset& operator|=(const Bitset& o) {
    assert(size_ == o.size_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }

  Bitset& operator&=(const Bitset& o) {
    assert(size_ == o.size_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }

  friend Bitset operator^(Bitset a, const Bitset& b) { return a ^= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }

  /// this & ~o
  Bitset and_not(const Bitset& o) const {
    assert(size_ == o.size_);
    Bitset r(size_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & ~o.words_[i];
    return r;
  }

  Bitset complemented() const {
    Bitset r(size_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
    r.trim();
    return r;
  }

  bool is_subset_of(const Bitset& o) const {
    assert(size_ == o.size_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  bool intersects(const Bitset& o) const {
    assert(size_ == o.size_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  /// Lowest set index, or -1 when empty.
  int lowest_bit() const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w]) return static_cast<int>(w * 64 + std::countr_zero(words_[w]));
    return -1;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t m = words_[w];
      while (m) {
        f(w * 64 + static_cast<std::size_t>(std::countr_zero(m)));
        m &= m - 1;
      }
    }
  }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  std::span<const std::uint64_t> words() const { return words_; }

  /// Low word of the storage; exact encoding when size() <= 64.
  std::uint64_t low_word() const { return words_.empty() ? 0 : words_[0]; }

  static std::size_t union_count(const Bitset& a, const Bitset& b) {
    assert(a.size_ == b.size_);
    std::size_t c = 0;
    for (std::size_t i = 0; i < a.words_.size(); ++i)
      c += static_cast<std::size_t>(std::popcount(a.words_[i] | b.words_[i]));
    return c;
  }

  /// Canonical enumeration order on subsets: cardinality ascending, then
  /// lexicographic on the ascending index sequence.  For equal cardinality
  /// the set owning the lowest differing index is the smaller one.
  static bool canonical_less(const Bitset& a, const Bitset& b) {
    assert(a.size_ == b.size_);
    std::size_t ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    for (std::size_t w = 0; w < a.words_.size(); ++w) {
      std::uint64_t d = a.words_[w] ^ b.words_[w];
      if (d) return (a.words_[w] >> std::countr_zero(d)) & 1u;
    }
    return false;
  }

  bool operator==(const Bitset&) const = default;

 private:
  static std::uint64_t tail_mask(std::size_t size) {
    return (size & 63) ? ((std::uint64_t{1} << (size & 63)) - 1) : ~std::uint64_t{0};
  }

  void trim() {
    if (!words_.empty()) words_.back() &= tail_mask(size_);
  }

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace lmd
