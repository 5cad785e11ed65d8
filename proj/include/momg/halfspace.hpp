#pragma once

#include <cmath>
#include <vector>

#include "momg/hermite.hpp"
#include "momg/types.hpp"

namespace momg {

/// Pairing integrals of Hermite polynomials over a half line:
///   upper(m,n) = (1/sqrt(2 pi)) \int_a^inf He_m(v) He_n(v) e^{-v^2/2} dv,
///   lower(m,n) = full(m,n) - upper(m,n),  full(m,n) = n! delta_{mn}.
/// Built from the erfc/exponential base row
///   upper(0,0) = erfc(a/sqrt2)/2,  upper(0,n) = He_{n-1}(a) e^{-a^2/2}/sqrt(2 pi)
/// and the two-term recurrence (from integrating d/dv[He_m e^{-v^2/2} He_n])
///   upper(m+1,n) = n upper(m,n-1) + He_m(a) He_n(a) e^{-a^2/2}/sqrt(2 pi).
template <typename Scalar>
class HalfRangeTable {
 public:
  HalfRangeTable(int max_degree, Scalar a) : pmax_(max_degree) {
    const int n = pmax_ + 1;
    std::vector<Scalar> he(n);
    he[0] = Scalar(1);
    if (pmax_ >= 1) he[1] = a;
    for (int k = 1; k + 1 <= pmax_; ++k) he[k + 1] = a * he[k] - Scalar(k) * he[k - 1];

    using std::erfc;
    using std::exp;
    using std::sqrt;
    const Scalar g = exp(-a * a / Scalar(2)) / sqrt(Scalar(8) * std::atan(Scalar(1)));

    up_.assign(n * n, Scalar(0));
    fullmn_.assign(n, Scalar(1));
    for (int k = 1; k <= pmax_; ++k) fullmn_[k] = fullmn_[k - 1] * Scalar(k);

    at(0, 0) = erfc(a / sqrt(Scalar(2))) / Scalar(2);
    for (int p = 1; p <= pmax_; ++p) at(0, p) = he[p - 1] * g;
    for (int m = 0; m + 1 <= pmax_; ++m)
      for (int p = 0; p <= pmax_; ++p)
        at(m + 1, p) = (p > 0 ? Scalar(p) * at(m, p - 1) : Scalar(0)) + he[m] * he[p] * g;
  }

  int max_degree() const { return pmax_; }

  Scalar upper(int m, int p) const { return up_[m * (pmax_ + 1) + p]; }
  Scalar lower(int m, int p) const {
    return (m == p ? fullmn_[p] : Scalar(0)) - upper(m, p);
  }

 private:
  Scalar& at(int m, int p) { return up_[m * (pmax_ + 1) + p]; }

  int pmax_;
  std::vector<Scalar> up_;
  std::vector<Scalar> fullmn_;
};

}  // namespace momg
