#pragma once

#include <random>

#include "momg/moment_rep.hpp"
#include "momg/projection.hpp"

namespace testing_helpers {

/// Random rep centered on its own bulk state: zero order-1 coefficients and
/// zero order-2 trace, higher coefficients O(scale) relative to density.
inline momg::MomentRep<double> random_grad_rep(std::mt19937& rng, int order,
                                               double scale = 0.1) {
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_real_distribution<double> pos(0.5, 2.0);
  const double rho = pos(rng);
  const double theta = pos(rng);
  momg::Vec3<double> u;
  for (int d = 0; d < 3; ++d) u[d] = 0.5 * unit(rng);
  momg::MomentRep<double> rep = momg::maxwellian_rep(rho, u, theta, order);
  const momg::IndexSet& set = momg::index_set(order);
  for (int k = 4; k < set.size(); ++k) {
    const double mag = scale * rho / std::sqrt(set.factorial(k));
    rep.coeffs[k] = mag * unit(rng);
  }
  // Zero the order-2 trace by adjusting the last diagonal entry.
  const int k1 = set.find(2, 0, 0), k2 = set.find(0, 2, 0), k3 = set.find(0, 0, 2);
  rep.coeffs[k3] = -(rep.coeffs[k1] + rep.coeffs[k2]);
  return rep;
}

}  // namespace testing_helpers
