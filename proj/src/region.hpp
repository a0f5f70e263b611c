#pragma once

#include <cstdint>
#include <vector>

#include "bits.hpp"

namespace mucheck {

// A set of (state, closure-node) pairs, stored column-wise: one state set
// per closure node. Sized for products around 10^6 pairs.
class ProductRegion {
 public:
  ProductRegion() = default;
  ProductRegion(uint32_t n_states, uint32_t n_nodes)
      : n_states_(n_states), cols_(n_nodes, Bits(n_states)) {}

  static ProductRegion full(uint32_t n_states, uint32_t n_nodes) {
    ProductRegion r(n_states, n_nodes);
    for (auto& c : r.cols_) c.fill();
    return r;
  }

  uint32_t n_states() const { return n_states_; }
  uint32_t n_nodes() const { return uint32_t(cols_.size()); }

  bool test(uint32_t state, uint32_t node) const {
    return cols_[node].test(state);
  }
  void set(uint32_t state, uint32_t node) { cols_[node].set(state); }

  const Bits& column(uint32_t node) const { return cols_[node]; }
  Bits& column(uint32_t node) { return cols_[node]; }

  uint64_t count() const {
    uint64_t c = 0;
    for (const auto& col : cols_) c += col.count();
    return c;
  }

  bool operator==(const ProductRegion& o) const { return cols_ == o.cols_; }
  bool operator!=(const ProductRegion& o) const { return !(*this == o); }

  bool subset_of(const ProductRegion& o) const {
    for (uint32_t j = 0; j < n_nodes(); ++j)
      if (!cols_[j].subset_of(o.cols_[j])) return false;
    return true;
  }
  bool intersects(const ProductRegion& o) const {
    for (uint32_t j = 0; j < n_nodes(); ++j)
      if (cols_[j].intersects(o.cols_[j])) return true;
    return false;
  }

 private:
  uint32_t n_states_ = 0;
  std::vector<Bits> cols_;
};

}  // namespace mucheck
