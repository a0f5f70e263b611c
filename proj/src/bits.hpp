#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace mucheck {

// Fixed-size dynamic bitset; the workhorse set representation for state sets
// and product-region columns.
class Bits {
 public:
  Bits() = default;
  explicit Bits(size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  size_t size() const { return n_; }

  bool test(size_t i) const {
    assert(i < n_);
    return (w_[i >> 6] >> (i & 63)) & 1;
  }
  void set(size_t i) {
    assert(i < n_);
    w_[i >> 6] |= uint64_t(1) << (i & 63);
  }
  void reset(size_t i) {
    assert(i < n_);
    w_[i >> 6] &= ~(uint64_t(1) << (i & 63));
  }

  void clear() { std::fill(w_.begin(), w_.end(), 0); }
  void fill() {
    std::fill(w_.begin(), w_.end(), ~uint64_t(0));
    trim();
  }

  size_t count() const {
    size_t c = 0;
    for (uint64_t w : w_) c += std::popcount(w);
    return c;
  }
  bool any() const {
    for (uint64_t w : w_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  Bits& operator&=(const Bits& o) {
    assert(n_ == o.n_);
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  Bits& operator|=(const Bits& o) {
    assert(n_ == o.n_);
    for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  // Removes every element of o from this set.
  Bits& subtract(const Bits& o) {
    assert(n_ == o.n_);
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
  }
  Bits operator&(const Bits& o) const {
    Bits r = *this;
    r &= o;
    return r;
  }
  Bits operator|(const Bits& o) const {
    Bits r = *this;
    r |= o;
    return r;
  }
  Bits complement() const {
    Bits r = *this;
    for (auto& w : r.w_) w = ~w;
    r.trim();
    return r;
  }

  bool operator==(const Bits& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator!=(const Bits& o) const { return !(*this == o); }

  bool subset_of(const Bits& o) const {
    assert(n_ == o.n_);
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }
  bool intersects(const Bits& o) const {
    assert(n_ == o.n_);
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  template <typename F>
  void for_each_set(F f) const {
    for (size_t wi = 0; wi < w_.size(); ++wi) {
      uint64_t w = w_[wi];
      while (w) {
        unsigned b = std::countr_zero(w);
        f(wi * 64 + b);
        w &= w - 1;
      }
    }
  }

 private:
  void trim() {
    if (n_ & 63) w_.back() &= (uint64_t(1) << (n_ & 63)) - 1;
  }
  size_t n_ = 0;
  std::vector<uint64_t> w_;
};

}  // namespace mucheck
