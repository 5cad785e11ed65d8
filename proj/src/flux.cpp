#include "momg/flux.hpp"

#include <cmath>

#include "momg/halfspace.hpp"
#include "momg/projection.hpp"

namespace momg {

MomentRep<double> full_flux_coeffs(const MomentRep<double>& w, int axis) {
  const IndexSet& set = index_set(w.order);
  MomentRep<double> out;
  out.order = w.order;
  out.params = w.params;
  out.coeffs = VecX<double>::Zero(set.size());
  const double mean_n = w.params.mean[axis];
  const double spread = w.params.spread;
  for (int k = 0; k < set.size(); ++k) {
    double g = mean_n * w.coeffs[k];
    const int down = set.down(k, axis);
    if (down >= 0) g += spread * w.coeffs[down];
    const int up = set.up(k, axis);
    if (up >= 0) g += (set[k][axis] + 1) * w.coeffs[up];
    out.coeffs[k] = g;
  }
  return out;
}

MomentRep<double> half_flux_coeffs(const MomentRep<double>& w, int axis,
                                   bool positive_side) {
  const IndexSet& set = index_set(w.order);
  const int order = w.order;
  const double spread = w.params.spread;
  if (!(spread > 0))
    throw NonphysicalState("half_flux_coeffs: nonpositive basis spread");
  const double root_spread = std::sqrt(spread);
  const double a = -w.params.mean[axis] / root_spread;
  const HalfRangeTable<double> table(order + 1, a);

  // Powers of sqrt(spread) for exponents -(order) .. order+1.
  std::vector<double> rs_pow(2 * order + 2);
  const int off = order;  // rs_pow[off + e] = spread^(e/2)
  rs_pow[off] = 1.0;
  for (int e = 1; e <= order + 1; ++e) rs_pow[off + e] = rs_pow[off + e - 1] * root_spread;
  for (int e = -1; e >= -order; --e) rs_pow[off + e] = rs_pow[off + e + 1] / root_spread;

  const double mean_n = w.params.mean[axis];
  auto pairing = [&](int m, int p) {
    return positive_side ? table.upper(m, p) : table.lower(m, p);
  };
  std::vector<double> fact(order + 1, 1.0);
  for (int p = 1; p <= order; ++p) fact[p] = fact[p - 1] * p;

  MomentRep<double> out;
  out.order = order;
  out.params = w.params;
  out.coeffs = VecX<double>::Zero(set.size());
  for (int k = 0; k < set.size(); ++k) {
    const MultiIndex& beta = set[k];
    const int p = beta[axis];
    const int tan_deg = beta.degree() - p;
    int idx[3] = {beta.a1, beta.a2, beta.a3};
    double acc = 0.0;
    for (int m = 0; m + tan_deg <= order; ++m) {
      idx[axis] = m;
      const double f = w.coeffs[set.find(idx[0], idx[1], idx[2])];
      if (f == 0.0) continue;
      double kernel = mean_n * pairing(m, p) + root_spread * pairing(m + 1, p);
      if (m > 0) kernel += root_spread * m * pairing(m - 1, p);
      acc += rs_pow[off + (p - m)] * f * kernel;
    }
    out.coeffs[k] = acc / fact[p];
  }
  return out;
}

MomentRep<double> face_flux(const MomentRep<double>& left,
                            const MomentRep<double>& right, int axis,
                            double c_bound) {
  const double ul = rep_velocity(left)[axis];
  const double ur = rep_velocity(right)[axis];
  const double cl = c_bound * std::sqrt(rep_temperature(left));
  const double cr = c_bound * std::sqrt(rep_temperature(right));
  const double lambda_minus = std::min(ul - cl, ur - cr);
  const double lambda_plus = std::max(ul + cl, ur + cr);

  BasisParams<double> face;
  face.mean = 0.5 * (left.params.mean + right.params.mean);
  face.spread = 0.5 * (left.params.spread + right.params.spread);

  if (lambda_minus >= 0.0) return full_flux_coeffs(project(left, face), axis);
  if (lambda_plus <= 0.0) return full_flux_coeffs(project(right, face), axis);
  MomentRep<double> up = half_flux_coeffs(project(left, face), axis, true);
  const MomentRep<double> low = half_flux_coeffs(project(right, face), axis, false);
  up.coeffs += low.coeffs;
  return up;
}

MomentRep<double> numerical_flux(const MomentRep<double>& left,
                                 const MomentRep<double>& right, int axis,
                                 double c_bound, const BasisParams<double>& target) {
  return project(face_flux(left, right, axis, c_bound), target);
}

MomentRep<double> wall_flux(const MomentRep<double>& inside, int axis,
                            bool wall_on_high_side, const WallSpec& wall) {
  BasisParams<double> wall_basis;
  wall_basis.mean = Vec3<double>::Zero();
  wall_basis.mean[axis == 0 ? 1 : 0] = wall.speed;  // tangential lid motion
  wall_basis.spread = wall.theta;

  const MomentRep<double> inside_w = project(inside, wall_basis);
  MomentRep<double> unit_wall;
  unit_wall.order = inside.order;
  unit_wall.params = wall_basis;
  unit_wall.coeffs = VecX<double>::Zero(IndexSet::count(inside.order));
  unit_wall.coeffs[0] = 1.0;

  MomentRep<double> out = half_flux_coeffs(inside_w, axis, wall_on_high_side);
  const MomentRep<double> in_unit =
      half_flux_coeffs(unit_wall, axis, !wall_on_high_side);
  if (in_unit.coeffs[0] == 0.0)
    throw NonphysicalState("wall_flux: degenerate incoming wall flux");
  const double wall_rho = -out.coeffs[0] / in_unit.coeffs[0];
  if (!(wall_rho > 0))
    throw NonphysicalState("wall_flux: nonpositive wall density");
  out.coeffs += wall_rho * in_unit.coeffs;
  out.coeffs[0] = 0.0;  // zero net mass flux holds exactly by construction
  return out;
}

}  // namespace momg
