#pragma once

#include <cassert>
#include <cstdint>
#include <vector>

namespace xt {

// Fixed-universe dynamic bitset. All sets in one computation share the same
// universe size, so word counts always agree.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int universe) : n_(universe), w_((universe + 63) / 64, 0) {}

  int universe() const { return n_; }

  void set(int i) { w_[i >> 6] |= (uint64_t{1} << (i & 63)); }
  void reset(int i) { w_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

  void clear() { std::fill(w_.begin(), w_.end(), 0); }

  int count() const {
    int c = 0;
    for (uint64_t x : w_) c += __builtin_popcountll(x);
    return c;
  }
  bool empty() const {
    for (uint64_t x : w_)
      if (x) return false;
    return true;
  }
  bool any() const { return !empty(); }

  // Lowest set bit, or -1.
  int first() const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i]) return int(i * 64 + __builtin_ctzll(w_[i]));
    return -1;
  }
  int next(int i) const {  // lowest set bit > i, or -1
    ++i;
    if (i >= n_) return -1;
    size_t wi = size_t(i) >> 6;
    uint64_t cur = w_[wi] & (~uint64_t{0} << (i & 63));
    while (true) {
      if (cur) return int(wi * 64 + __builtin_ctzll(cur));
      if (++wi >= w_.size()) return -1;
      cur = w_[wi];
    }
  }

  Bitset& operator|=(const Bitset& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  Bitset& operator&=(const Bitset& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  Bitset& operator-=(const Bitset& o) {  // set difference
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
  }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

  bool operator==(const Bitset& o) const { return w_ == o.w_; }
  bool operator!=(const Bitset& o) const { return w_ != o.w_; }
  // Lexicographic on words; total order used for deterministic maps.
  bool operator<(const Bitset& o) const { return w_ < o.w_; }

  bool intersects(const Bitset& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }
  bool subset_of(const Bitset& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }
  bool overlaps(const Bitset& o) const {  // proper overlap: A # B
    return intersects(o) && !subset_of(o) && !o.subset_of(*this);
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for (int i = first(); i >= 0; i = next(i)) out.push_back(i);
    return out;
  }
  static Bitset of(int universe, std::initializer_list<int> bits) {
    Bitset b(universe);
    for (int i : bits) b.set(i);
    return b;
  }

  const std::vector<uint64_t>& words() const { return w_; }

 private:
  int n_ = 0;
  std::vector<uint64_t> w_;
};

}  // namespace xt
