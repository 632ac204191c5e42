#pragma once

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace evenhole {

/// Fixed-capacity bit set over vertex ids [0, nbits).
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

  int capacity() const { return nbits_; }

  void set(int i) {
    assert(i >= 0 && i < nbits_);
    words_[i >> 6] |= uint64_t{1} << (i & 63);
  }
  void reset(int i) {
    assert(i >= 0 && i < nbits_);
    words_[i >> 6] &= ~(uint64_t{1} << (i & 63));
  }
  bool test(int i) const {
    assert(i >= 0 && i < nbits_);
    return (words_[i >> 6] >> (i & 63)) & 1;
  }

  int count() const {
    int c = 0;
    for (uint64_t w : words_) c += std::popcount(w);
    return c;
  }
  bool none() const {
    for (uint64_t w : words_) {
      if (w) return false;
    }
    return true;
  }
  bool any() const { return !none(); }

  Bitset& operator|=(const Bitset& o) {
    assert(nbits_ == o.nbits_);
    for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  Bitset& operator&=(const Bitset& o) {
    assert(nbits_ == o.nbits_);
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  Bitset& and_not(const Bitset& o) {
    assert(nbits_ == o.nbits_);
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }

  bool intersects(const Bitset& o) const {
    assert(nbits_ == o.nbits_);
    for (size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & o.words_[i]) return true;
    }
    return false;
  }

  /// True iff the intersection with `o` is exactly the single bit `i`.
  bool intersection_is_single(const Bitset& o, int i) const {
    uint64_t expect_word = uint64_t{1} << (i & 63);
    size_t expect_idx = static_cast<size_t>(i >> 6);
    for (size_t k = 0; k < words_.size(); ++k) {
      uint64_t inter = words_[k] & o.words_[k];
      if (k == expect_idx) {
        if (inter != expect_word) return false;
      } else if (inter) {
        return false;
      }
    }
    return true;
  }

  /// True iff the intersection with `o` is exactly the bits {i, j}, i != j.
  bool intersection_is_pair(const Bitset& o, int i, int j) const {
    for (size_t k = 0; k < words_.size(); ++k) {
      uint64_t expect = 0;
      if (static_cast<size_t>(i >> 6) == k) expect |= uint64_t{1} << (i & 63);
      if (static_cast<size_t>(j >> 6) == k) expect |= uint64_t{1} << (j & 63);
      if ((words_[k] & o.words_[k]) != expect) return false;
    }
    return true;
  }

  /// All bits in (v, nbits); pass v = -1 for every bit.
  static Bitset above(int nbits, int v) {
    Bitset s(nbits);
    for (size_t k = 0; k < s.words_.size(); ++k) {
      int lo = static_cast<int>(k * 64);
      int hi = std::min(lo + 64, nbits);
      uint64_t w = hi - lo == 64 ? ~uint64_t{0} : (uint64_t{1} << (hi - lo)) - 1;
      if (v >= hi) {
        w = 0;
      } else if (v >= lo) {
        w &= ~((uint64_t{1} << (v - lo + 1)) - 1);
      }
      s.words_[k] = w;
    }
    return s;
  }

  bool operator==(const Bitset& o) const { return nbits_ == o.nbits_ && words_ == o.words_; }

  template <class F>
  void for_each(F&& f) const {
    for (size_t k = 0; k < words_.size(); ++k) {
      uint64_t w = words_[k];
      while (w) {
        int b = std::countr_zero(w);
        f(static_cast<int>(k * 64 + b));
        w &= w - 1;
      }
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](int v) { out.push_back(v); });
    return out;
  }

  static Bitset of(int nbits, std::initializer_list<int> bits) {
    Bitset s(nbits);
    for (int b : bits) s.set(b);
    return s;
  }

 private:
  int nbits_ = 0;
  std::vector<uint64_t> words_;
};

}  // namespace evenhole
