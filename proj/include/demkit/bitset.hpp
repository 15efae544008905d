#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace demkit {

// Fixed-width bitset used for edge sets in the covering solvers.
class EdgeBitset {
 public:
  EdgeBitset() = default;
  explicit EdgeBitset(int bits) : bits_(bits), w_((bits + 63) / 64, 0) {}

  int size() const { return bits_; }

  void set(int i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void clear(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

  void reset() {
    for (auto& w : w_) w = 0;
  }

  EdgeBitset& operator|=(const EdgeBitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }

  int count() const {
    int c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
  }

  bool any() const {
    for (auto w : w_)
      if (w) return true;
    return false;
  }

  bool is_subset_of(const EdgeBitset& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  // popcount of (this & ~covered): edges this set would newly cover
  int count_uncovered_in(const EdgeBitset& covered) const {
    int c = 0;
    for (std::size_t i = 0; i < w_.size(); ++i)
      c += std::popcount(w_[i] & ~covered.w_[i]);
    return c;
  }

  friend bool operator==(const EdgeBitset& a, const EdgeBitset& b) {
    return a.bits_ == b.bits_ && a.w_ == b.w_;
  }

  static EdgeBitset full(int bits) {
    EdgeBitset s(bits);
    for (int i = 0; i < bits; ++i) s.set(i);
    return s;
  }

 private:
  int bits_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace demkit
