#pragma once

#include <cstdint>
#include <vector>

#include "momg/types.hpp"

namespace momg {

/// Multi-index in N_0^3 addressing one basis function of the expansion.
struct MultiIndex {
  int a1 = 0, a2 = 0, a3 = 0;

  int degree() const { return a1 + a2 + a3; }
  int operator[](int d) const { return d == 0 ? a1 : (d == 1 ? a2 : a3); }
  bool operator==(const MultiIndex& o) const {
    return a1 == o.a1 && a2 == o.a2 && a3 == o.a3;
  }
};

/// Enumeration of all multi-indices with degree <= order in graded
/// lexicographic order: ascending degree, descending lexicographic within one
/// degree. Position 0 is (0,0,0), positions 1..3 are e_1, e_2, e_3.
/// Immutable once built; safe to share across threads.
class IndexSet {
 public:
  explicit IndexSet(int order) : order_(order) {
    if (order < 0) throw Error("IndexSet: negative order");
    const int n = count(order);
    indices_.reserve(n);
    for (int deg = 0; deg <= order; ++deg)
      for (int a1 = deg; a1 >= 0; --a1)
        for (int a2 = deg - a1; a2 >= 0; --a2)
          indices_.push_back({a1, a2, deg - a1 - a2});
    const int side = order + 1;
    flat_.assign(side * side * side, -1);
    for (int k = 0; k < n; ++k) {
      const MultiIndex& m = indices_[k];
      flat_[(m.a1 * side + m.a2) * side + m.a3] = k;
    }
    for (int d = 0; d < 3; ++d) {
      down_[d].resize(n);
      up_[d].resize(n);
      for (int k = 0; k < n; ++k) {
        MultiIndex m = indices_[k];
        int a[3] = {m.a1, m.a2, m.a3};
        --a[d];
        down_[d][k] = find(a[0], a[1], a[2]);
        a[d] += 2;
        up_[d][k] = find(a[0], a[1], a[2]);
      }
    }
    degree_.resize(n);
    factorial_.resize(n);
    for (int k = 0; k < n; ++k) {
      degree_[k] = indices_[k].degree();
      factorial_[k] = fact(indices_[k].a1) * fact(indices_[k].a2) * fact(indices_[k].a3);
    }
  }

  int order() const { return order_; }
  int size() const { return static_cast<int>(indices_.size()); }
  const MultiIndex& operator[](int k) const { return indices_[k]; }

  /// Flat position of (a1,a2,a3), or -1 when outside the truncated set.
  int find(int a1, int a2, int a3) const {
    const int side = order_ + 1;
    if (a1 < 0 || a2 < 0 || a3 < 0 || a1 + a2 + a3 > order_) return -1;
    return flat_[(a1 * side + a2) * side + a3];
  }

  /// Position of indices_[k] - e_d, or -1.
  int down(int k, int d) const { return down_[d][k]; }
  /// Position of indices_[k] + e_d, or -1 when the degree would exceed order.
  int up(int k, int d) const { return up_[d][k]; }

  int degree(int k) const { return degree_[k]; }
  /// alpha! = a1! a2! a3! as a double.
  double factorial(int k) const { return factorial_[k]; }

  /// Number of multi-indices with degree <= order.
  static int count(int order) {
    return (order + 1) * (order + 2) * (order + 3) / 6;
  }

 private:
  static double fact(int n) {
    double r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
  }

  int order_;
  std::vector<MultiIndex> indices_;
  std::vector<std::int32_t> flat_;
  std::vector<std::int32_t> down_[3], up_[3];
  std::vector<std::int32_t> degree_;
  std::vector<double> factorial_;
};

/// Process-wide cache, one immutable IndexSet per order. Thread-safe; touch
/// the orders you need once before entering parallel regions.
const IndexSet& index_set(int order);

}  // namespace momg
