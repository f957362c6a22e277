#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace idealgraph {

// Fixed-width bit set sized at construction. Binary operations require equal
// widths; unused tail bits are kept zero so equality and popcounts are exact.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int bit_count)
      : nbits_(bit_count), words_(word_count(bit_count), 0) {
    assert(bit_count >= 0);
  }

  static Bitset full(int bit_count) {
    Bitset b(bit_count);
    for (auto& w : b.words_) w = ~std::uint64_t{0};
    b.mask_tail();
    return b;
  }

  int bit_count() const { return nbits_; }

  bool test(int i) const {
    assert(i >= 0 && i < nbits_);
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }

  void set(int i) {
    assert(i >= 0 && i < nbits_);
    words_[i >> 6] |= std::uint64_t{1} << (i & 63);
  }

  void reset(int i) {
    assert(i >= 0 && i < nbits_);
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
    for (auto w : words_) {
      if (w) return true;
    }
    return false;
  }

  bool none() const { return !any(); }

  // Index of the lowest set bit, -1 if empty.
  int first_set() const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      if (words_[k]) return static_cast<int>(k << 6) + std::countr_zero(words_[k]);
    }
    return -1;
  }

  bool intersects(const Bitset& o) const {
    assert(nbits_ == o.nbits_);
    for (std::size_t k = 0; k < words_.size(); ++k) {
      if (words_[k] & o.words_[k]) return true;
    }
    return false;
  }

  int intersection_count(const Bitset& o) const {
    assert(nbits_ == o.nbits_);
    int c = 0;
    for (std::size_t k = 0; k < words_.size(); ++k) {
      c += std::popcount(words_[k] & o.words_[k]);
    }
    return c;
  }

  bool is_subset_of(const Bitset& o) const {
    assert(nbits_ == o.nbits_);
    for (std::size_t k = 0; k < words_.size(); ++k) {
      if (words_[k] & ~o.words_[k]) return false;
    }
    return true;
  }

  Bitset& operator&=(const Bitset& o) {
    assert(nbits_ == o.nbits_);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }

  Bitset& operator|=(const Bitset& o) {
    assert(nbits_ == o.nbits_);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }

  Bitset& operator^=(const Bitset& o) {
    assert(nbits_ == o.nbits_);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= o.words_[k];
    return *this;
  }

  // In-place set difference: this \ o.
  Bitset& subtract(const Bitset& o) {
    assert(nbits_ == o.nbits_);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
    return *this;
  }

  Bitset and_not(const Bitset& o) const {
    Bitset r = *this;
    r.subtract(o);
    return r;
  }

  Bitset complemented() const {
    Bitset r(nbits_);
    for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] = ~words_[k];
    r.mask_tail();
    return r;
  }

  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

  template <class F>
  void for_each_set(F&& f) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      while (w) {
        int bit = std::countr_zero(w);
        f(static_cast<int>(k << 6) + bit);
        w &= w - 1;
      }
    }
  }

  std::vector<int> to_indices() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for_each_set([&](int v) { out.push_back(v); });
    return out;
  }

  friend bool operator==(const Bitset&, const Bitset&) = default;

 private:
  static std::size_t word_count(int bits) {
    return static_cast<std::size_t>((bits + 63) / 64);
  }

  void mask_tail() {
    int r = nbits_ & 63;
    if (r != 0 && !words_.empty()) {
      words_.back() &= (std::uint64_t{1} << r) - 1;
    }
  }

  int nbits_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace idealgraph
