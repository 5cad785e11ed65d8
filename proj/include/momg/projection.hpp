#pragma once

#include <cmath>
#include <string>

#include "momg/moment_rep.hpp"

namespace momg {

/// Shifts the basis mean along one axis, rewriting the coefficients so that
/// every velocity moment up to the truncation order is preserved. The
/// coefficient system under a mean change is nilpotent triangular
/// (d f_alpha / d mean_d = -f_{alpha - e_d}), so the finite Taylor sum applied
/// here is exact:
///   g_alpha = sum_k (-delta)^k / k! * f_{alpha - k e_d}.
template <typename Scalar>
void shift_mean_coeffs(VecX<Scalar>& coeffs, int order, int axis, Scalar delta) {
  if (delta == Scalar(0)) return;
  const IndexSet& set = index_set(order);
  for (int k = set.size() - 1; k >= 0; --k) {
    Scalar acc = coeffs[k];
    Scalar w = Scalar(1);
    int n = 1;
    for (int j = set.down(k, axis); j >= 0; j = set.down(j, axis)) {
      w *= -delta / Scalar(n++);
      acc += w * coeffs[j];
    }
    coeffs[k] = acc;
  }
}

/// Changes the basis spread, rewriting the coefficients moment-preservingly.
/// The coefficient system is d f_alpha / d spread = -(1/2) sum_d
/// f_{alpha - 2 e_d}, again nilpotent triangular, so the Taylor sum is exact.
template <typename Scalar>
void shift_spread_coeffs(VecX<Scalar>& coeffs, int order, Scalar delta) {
  if (delta == Scalar(0)) return;
  const IndexSet& set = index_set(order);
  const int n = set.size();
  VecX<Scalar> cur = coeffs;
  VecX<Scalar> nxt(n);
  Scalar w = Scalar(1);
  for (int k = 1; 2 * k <= order; ++k) {
    w *= -delta / (Scalar(2) * Scalar(k));
    for (int i = 0; i < n; ++i) {
      Scalar s = Scalar(0);
      for (int d = 0; d < 3; ++d) {
        int j = set.down(i, d);
        if (j >= 0) j = set.down(j, d);
        if (j >= 0) s += cur[j];
      }
      nxt[i] = s;
    }
    coeffs += w * nxt;
    cur.swap(nxt);
  }
}

/// Re-expands a coefficient array from one basis into another such that all
/// velocity moments up to the truncation order are identical. Composed of
/// three mean shifts and one spread shift; the elementary shift operators
/// commute, so the composition order is immaterial. Valid for any coefficient
/// array tagged with a basis (states, fluxes, residuals).
template <typename Scalar>
void project_coeffs(VecX<Scalar>& coeffs, int order,
                    const BasisParams<Scalar>& from,
                    const BasisParams<Scalar>& to) {
  if (!(to.spread > Scalar(0)))
    throw NonphysicalState("project_coeffs: target spread must be positive");
  for (int d = 0; d < 3; ++d)
    shift_mean_coeffs(coeffs, order, d, to.mean[d] - from.mean[d]);
  shift_spread_coeffs(coeffs, order, to.spread - from.spread);
}

/// Moment-preserving change of basis parameters, in place.
template <typename Scalar>
void project_in_place(MomentRep<Scalar>& rep, const BasisParams<Scalar>& to) {
  project_coeffs(rep.coeffs, rep.order, rep.params, to);
  rep.params = to;
}

/// Moment-preserving change of basis parameters.
template <typename Scalar>
MomentRep<Scalar> project(const MomentRep<Scalar>& rep,
                          const BasisParams<Scalar>& to) {
  MomentRep<Scalar> out = rep;
  project_in_place(out, to);
  return out;
}

/// Re-centers the basis on the rep's own velocity and temperature so that the
/// order-1 coefficients and the order-2 trace vanish (relative tolerance
/// `rel_tol` against coeffs[0]). One projection is exact in exact arithmetic;
/// the loop only guards round-off. Throws NonphysicalState when density or
/// temperature is nonpositive or non-finite.
template <typename Scalar>
MomentRep<Scalar>& grad_normalize(MomentRep<Scalar>& rep,
                                  Scalar rel_tol = Scalar(1e-12),
                                  int max_iter = 30) {
  if (rep.order < 2) throw Error("grad_normalize: order must be >= 2");
  for (int iter = 0; iter < max_iter; ++iter) {
    const Scalar rho = rep.coeffs[0];
    if (!std::isfinite(static_cast<double>(rho)) || !(rho > Scalar(0)))
      throw NonphysicalState("grad_normalize: nonpositive or non-finite density " +
                             std::to_string(static_cast<double>(rho)));
    if (grad_defect(rep) <= rel_tol) return rep;
    BasisParams<Scalar> to;
    to.mean = rep_velocity(rep);
    to.spread = rep_temperature(rep);
    if (!std::isfinite(static_cast<double>(to.spread)) || !(to.spread > Scalar(0)))
      throw NonphysicalState("grad_normalize: nonpositive or non-finite temperature " +
                             std::to_string(static_cast<double>(to.spread)));
    for (int d = 0; d < 3; ++d)
      if (!std::isfinite(static_cast<double>(to.mean[d])))
        throw NonphysicalState("grad_normalize: non-finite velocity");
    project_in_place(rep, to);
  }
  if (grad_defect(rep) > rel_tol)
    throw Error("grad_normalize: tolerance not reached within iteration cap");
  return rep;
}

}  // namespace momg
