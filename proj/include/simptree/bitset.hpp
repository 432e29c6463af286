#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace simptree {

/**
 * Fixed-universe set of small integers packed into 64-bit words.
 *
 * The universe size is set at construction and never changes; elements are
 * 0 .. universe()-1. Binary operations require operands with equal universe.
 * Used for vertex sets (universe = vertex count) and for facet index sets
 * (universe = facet count).
 */
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int universe)
      : n_(universe), w_(static_cast<std::size_t>((universe + 63) / 64), 0) {}

  int universe() const { return n_; }

  bool test(int i) const { return (w_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u; }
  void set(int i) { w_[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { w_[static_cast<std::size_t>(i) >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  void clear() { std::fill(w_.begin(), w_.end(), 0); }

  bool any() const {
    for (auto w : w_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  int count() const {
    int c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
  }

  /// True when every element of *this is also in `o`.
  bool subset_of(const Bitset& o) const {
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & ~o.w_[k]) return false;
    return true;
  }

  bool intersects(const Bitset& o) const {
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & o.w_[k]) return true;
    return false;
  }

  Bitset& operator&=(const Bitset& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
    return *this;
  }
  /// Set difference: removes every element of `o`.
  Bitset& operator-=(const Bitset& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= ~o.w_[k];
    return *this;
  }

  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

  friend bool operator==(const Bitset& a, const Bitset& b) {
    return a.n_ == b.n_ && a.w_ == b.w_;
  }
  friend bool operator!=(const Bitset& a, const Bitset& b) { return !(a == b); }

  /// Accumulate an intersection without a temporary: *this |= (a & b).
  void or_and(const Bitset& a, const Bitset& b) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= a.w_[k] & b.w_[k];
  }

  /// Smallest element, or -1 when empty.
  int first() const { return next(-1); }

  /// Smallest element greater than `i`, or -1 when none.
  int next(int i) const {
    ++i;
    if (i < 0 || i >= n_) return -1;
    std::size_t k = static_cast<std::size_t>(i) >> 6;
    std::uint64_t w = w_[k] >> (i & 63);
    if (w) return i + std::countr_zero(w);
    for (++k; k < w_.size(); ++k)
      if (w_[k]) return static_cast<int>(k << 6) + std::countr_zero(w_[k]);
    return -1;
  }

  template <class F>
  void for_each(F f) const {
    for (int i = first(); i >= 0; i = next(i)) f(i);
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

  /// (a & b) == u, evaluated word-wise without a temporary.
  friend bool intersection_equals(const Bitset& a, const Bitset& b, const Bitset& u) {
    for (std::size_t k = 0; k < a.w_.size(); ++k)
      if ((a.w_[k] & b.w_[k]) != u.w_[k]) return false;
    return true;
  }

  std::size_t hash() const {
    std::size_t h = 0xcbf29ce484222325ull ^ static_cast<std::size_t>(n_);
    for (auto w : w_) {
      h ^= static_cast<std::size_t>(w);
      h *= 0x100000001b3ull;
    }
    return h;
  }

 private:
  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace simptree
