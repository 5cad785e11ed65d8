#pragma once

#include <cmath>
#include <string>

#include "momg/multi_index.hpp"
#include "momg/types.hpp"

namespace momg {

/// Parameters of the expansion basis: the basis function of multi-index alpha
/// is a Gaussian centered at `mean` with isotropic variance `spread`, times
/// the product of probabilists' Hermite polynomials He_{alpha_d} in the
/// standardized velocity (xi - mean)/sqrt(spread), normalized so that the
/// coefficient of (0,0,0) is the mass density of the represented function.
template <typename Scalar>
struct BasisParams {
  Vec3<Scalar> mean = Vec3<Scalar>::Zero();
  Scalar spread = Scalar(1);
};

/// Truncated Hermite expansion of a velocity distribution: coeffs[k]
/// multiplies the basis function of index_set(order)[k]. The represented
/// function and all its velocity moments up to `order` are determined by
/// (params, coeffs); changing params requires the moment-preserving
/// projection, not a plain copy of coefficients.
template <typename Scalar>
struct MomentRep {
  int order = 0;
  BasisParams<Scalar> params;
  VecX<Scalar> coeffs;
};

/// Bulk quantities of a distribution: density, velocity, temperature in
/// specific-energy units (velocity squared), deviatoric stress, heat flux.
template <typename Scalar>
struct MacroState {
  Scalar rho = Scalar(0);
  Vec3<Scalar> velocity = Vec3<Scalar>::Zero();
  Scalar theta = Scalar(0);
  Mat3<Scalar> sigma = Mat3<Scalar>::Zero();
  Vec3<Scalar> heat_flux = Vec3<Scalar>::Zero();
};

/// Maxwellian with the given bulk state, expanded about its own mean and
/// temperature: the single nonzero coefficient is coeffs[0] = rho.
template <typename Scalar>
MomentRep<Scalar> maxwellian_rep(Scalar rho, const Vec3<Scalar>& u, Scalar theta,
                                 int order) {
  if (!(rho > Scalar(0)) || !(theta > Scalar(0)))
    throw NonphysicalState("maxwellian_rep: rho and theta must be positive");
  MomentRep<Scalar> rep;
  rep.order = order;
  rep.params.mean = u;
  rep.params.spread = theta;
  rep.coeffs = VecX<Scalar>::Zero(IndexSet::count(order));
  rep.coeffs[0] = rho;
  return rep;
}

/// Mass density; valid for any basis parameters.
template <typename Scalar>
Scalar rep_density(const MomentRep<Scalar>& rep) {
  return rep.coeffs[0];
}

/// Bulk velocity from the order-0/1 moments; valid for any basis parameters.
/// Requires order >= 1 and positive density.
template <typename Scalar>
Vec3<Scalar> rep_velocity(const MomentRep<Scalar>& rep) {
  const Scalar rho = rep.coeffs[0];
  if (rep.order < 1) return rep.params.mean;
  Vec3<Scalar> u = rep.params.mean;
  for (int d = 0; d < 3; ++d) u[d] += rep.coeffs[1 + d] / rho;
  return u;
}

/// Temperature from the order-2 trace; valid for any basis parameters.
/// Requires order >= 2 and positive density.
template <typename Scalar>
Scalar rep_temperature(const MomentRep<Scalar>& rep) {
  if (rep.order < 2) throw Error("rep_temperature: order must be >= 2");
  const IndexSet& set = index_set(rep.order);
  const Scalar rho = rep.coeffs[0];
  Scalar trace = Scalar(0);
  Scalar fe2 = Scalar(0);
  for (int d = 0; d < 3; ++d) {
    const int k2 = set.up(1 + d, d);  // 2 e_d
    trace += rep.coeffs[k2];
    fe2 += rep.coeffs[1 + d] * rep.coeffs[1 + d];
  }
  return rep.params.spread + (Scalar(2) * trace - fe2 / rho) / (Scalar(3) * rho);
}

/// Largest violation of the self-centered-basis constraints: the order-1
/// coefficients and the order-2 trace, both relative to coeffs[0].
template <typename Scalar>
Scalar grad_defect(const MomentRep<Scalar>& rep) {
  if (rep.order < 2) throw Error("grad_defect: order must be >= 2");
  const IndexSet& set = index_set(rep.order);
  using std::abs;
  Scalar defect = Scalar(0);
  Scalar trace = Scalar(0);
  for (int d = 0; d < 3; ++d) {
    defect = std::max(defect, abs(rep.coeffs[1 + d]));
    trace += rep.coeffs[set.up(1 + d, d)];
  }
  defect = std::max(defect, abs(trace));
  return defect / abs(rep.coeffs[0]);
}

/// Reads the bulk state off a rep whose basis parameters coincide with its own
/// velocity and temperature (order-1 coefficients and order-2 trace zero):
/// sigma_ij = (1 + delta_ij) f_{e_i+e_j}, q_i = 2 f_{3 e_i} + sum_d f_{2 e_d + e_i}.
/// Requires order >= 3.
template <typename Scalar>
MacroState<Scalar> extract_macro(const MomentRep<Scalar>& rep) {
  if (rep.order < 3) throw Error("extract_macro: order must be >= 3");
  if (!(rep.coeffs[0] > Scalar(0)))
    throw NonphysicalState("extract_macro: nonpositive density");
  const IndexSet& set = index_set(rep.order);
  MacroState<Scalar> macro;
  macro.rho = rep.coeffs[0];
  macro.velocity = rep.params.mean;
  macro.theta = rep.params.spread;
  for (int i = 0; i < 3; ++i) {
    for (int j = i; j < 3; ++j) {
      const int k = set.up(1 + i, j);  // e_i + e_j
      const Scalar delta = (i == j) ? Scalar(1) : Scalar(0);
      macro.sigma(i, j) = (Scalar(1) + delta) * rep.coeffs[k];
      macro.sigma(j, i) = macro.sigma(i, j);
    }
  }
  for (int i = 0; i < 3; ++i) {
    Scalar q = Scalar(2) * rep.coeffs[set.find(i == 0 ? 3 : 0, i == 1 ? 3 : 0,
                                               i == 2 ? 3 : 0)];
    for (int d = 0; d < 3; ++d) {
      int a[3] = {0, 0, 0};
      a[d] += 2;
      a[i] += 1;
      q += rep.coeffs[set.find(a[0], a[1], a[2])];
    }
    macro.heat_flux[i] = q;
  }
  return macro;
}

}  // namespace momg
