#pragma once

#include <cmath>

#include <Eigen/Eigenvalues>

#include "momg/moment_rep.hpp"
#include "momg/projection.hpp"

namespace momg {

enum class CollisionKind { bgk, es_bgk, shakhov };

/// Relaxation-model selector. `beta` is the model-dependent prefactor of the
/// collision frequency: the Prandtl number for the anisotropic-Gaussian model,
/// 1 otherwise.
struct CollisionModel {
  CollisionKind kind = CollisionKind::bgk;
  double prandtl = 1.0;

  double beta() const {
    return kind == CollisionKind::es_bgk ? prandtl : 1.0;
  }
};

/// Gas data entering the collision frequency. `knudsen` is consumed only by
/// collision_frequency; `molecule_mass` only enters unit conversions at the
/// I/O boundary.
struct GasParams {
  double knudsen = 1.0;
  double viscosity_index = 0.81;
  double molecule_mass = 6.63e-26;
};

/// nu = beta * sqrt(pi/2) * (1/Kn) * rho * theta^(1 - w).
template <typename Scalar>
Scalar collision_frequency(Scalar rho, Scalar theta, const CollisionModel& model,
                           const GasParams& gas) {
  if (!(gas.knudsen > 0)) throw ConfigError("collision_frequency: Kn must be positive");
  const Scalar root_half_pi = Scalar(std::sqrt(std::atan(1.0) * 2.0));
  using std::pow;
  return Scalar(model.beta()) * root_half_pi / Scalar(gas.knudsen) * rho *
         pow(theta, Scalar(1) - Scalar(gas.viscosity_index));
}

/// Coefficients of an anisotropic Gaussian with density rho and covariance
/// Lambda, expanded in the isotropic basis (mean u, spread theta) centered on
/// the same bulk state. From the moment generating function, the coefficients
/// obey the two-step recurrence
///   g_{mu + e_d} = sum_j C_{dj} g_{mu - e_j} / (mu_d + 1),  C = Lambda - theta I,
/// seeded at g_0 = rho, with all odd-degree coefficients zero.
template <typename Scalar>
MomentRep<Scalar> gaussian_rep(Scalar rho, const Vec3<Scalar>& u, Scalar theta,
                               const Mat3<Scalar>& lambda, int order) {
  MomentRep<Scalar> rep = maxwellian_rep(rho, u, theta, order);
  const Mat3<Scalar> c = lambda - theta * Mat3<Scalar>::Identity();
  const IndexSet& set = index_set(order);
  for (int k = 1; k < set.size(); ++k) {
    if (set.degree(k) % 2 == 1) continue;
    int d = 0;
    while (set.down(k, d) < 0) ++d;
    const int mu = set.down(k, d);
    Scalar acc = Scalar(0);
    for (int j = 0; j < 3; ++j) {
      const int i = set.down(mu, j);
      if (i >= 0) acc += c(d, j) * rep.coeffs[i];
    }
    rep.coeffs[k] = acc / Scalar(set[mu][d] + 1);
  }
  return rep;
}

/// Local equilibrium of the chosen model, expanded in the basis centered on
/// macro (velocity, theta). Shares density, velocity, and temperature with the
/// input state; its stress is 0 (BGK, cubic-corrected) or (1 - 1/Pr) sigma
/// (anisotropic Gaussian); its heat flux is 0 (BGK, Gaussian) or (1 - Pr) q
/// (cubic-corrected).
template <typename Scalar>
MomentRep<Scalar> equilibrium_rep(const CollisionModel& model,
                                  const MacroState<Scalar>& macro, int order) {
  switch (model.kind) {
    case CollisionKind::bgk:
      return maxwellian_rep(macro.rho, macro.velocity, macro.theta, order);
    case CollisionKind::es_bgk: {
      const Scalar corr = Scalar(1) - Scalar(1) / Scalar(model.prandtl);
      const Mat3<Scalar> lambda =
          macro.theta * Mat3<Scalar>::Identity() + corr / macro.rho * macro.sigma;
      Eigen::SelfAdjointEigenSolver<Mat3<Scalar>> solver(lambda);
      const Scalar min_eig = solver.eigenvalues().minCoeff();
      if (!(min_eig > Scalar(1e-12) * macro.theta))
        throw NonSpdTensor("equilibrium_rep: anisotropic-Gaussian tensor not SPD",
                           static_cast<double>(min_eig));
      return gaussian_rep(macro.rho, macro.velocity, macro.theta, lambda, order);
    }
    case CollisionKind::shakhov: {
      MomentRep<Scalar> rep =
          maxwellian_rep(macro.rho, macro.velocity, macro.theta, order);
      if (order >= 3) {
        const IndexSet& set = index_set(order);
        const Scalar w = (Scalar(1) - Scalar(model.prandtl)) / Scalar(5);
        for (int d = 0; d < 3; ++d) {
          for (int dd = 0; dd < 3; ++dd) {
            int a[3] = {0, 0, 0};
            a[dd] += 2;
            a[d] += 1;  // 3 e_d when dd == d, else e_d + 2 e_dd
            rep.coeffs[set.find(a[0], a[1], a[2])] = w * macro.heat_flux[d];
          }
        }
      }
      return rep;
    }
  }
  throw Error("equilibrium_rep: unknown collision kind");
}

/// Relaxation term nu (f_eq - f) in the rep's own basis. The rep must be
/// centered on its own bulk state, so the equilibrium shares its basis and no
/// projection is needed; mass, momentum, and energy moments of the result
/// vanish identically.
template <typename Scalar>
VecX<Scalar> collision_coeffs(const MomentRep<Scalar>& rep,
                              const CollisionModel& model, const GasParams& gas) {
  const MacroState<Scalar> macro = extract_macro(rep);
  const Scalar nu = collision_frequency(macro.rho, macro.theta, model, gas);
  MomentRep<Scalar> eq = equilibrium_rep(model, macro, rep.order);
  return nu * (eq.coeffs - rep.coeffs);
}

}  // namespace momg
