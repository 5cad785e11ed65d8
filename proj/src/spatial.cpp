#include "momg/spatial.hpp"

#include <exception>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "momg/hermite.hpp"
#include "momg/projection.hpp"

namespace momg {

SpatialScheme SpatialScheme::for_moment_order(int moment_order, int space_order) {
  if (space_order != 1 && space_order != 2)
    throw ConfigError("SpatialScheme: reconstruction order must be 1 or 2");
  SpatialScheme s;
  s.order = space_order;
  s.c_bound = max_hermite_root(moment_order + 1);
  return s;
}

namespace {

struct Slope {
  Vec3<double> mean = Vec3<double>::Zero();
  double spread = 0.0;
  VecX<double> coeffs;
};

// Central-difference slope of cell (i, j) along `axis`; zero at cells
// adjacent to a wall in that direction.
Slope slope_along(const CellField& f, int i, int j, int axis) {
  Slope s;
  const Grid2D& g = f.grid();
  const int m = axis == 0 ? i : j;
  const int last = (axis == 0 ? g.nx : g.ny) - 1;
  if (m == 0 || m == last) {
    s.coeffs = VecX<double>::Zero(IndexSet::count(f.order()));
    return s;
  }
  const MomentRep<double>& lo = axis == 0 ? f.at(i - 1, j) : f.at(i, j - 1);
  const MomentRep<double>& hi = axis == 0 ? f.at(i + 1, j) : f.at(i, j + 1);
  const double h = axis == 0 ? g.xc[i + 1] - g.xc[i - 1] : g.yc[j + 1] - g.yc[j - 1];
  s.mean = (hi.params.mean - lo.params.mean) / h;
  s.spread = (hi.params.spread - lo.params.spread) / h;
  s.coeffs = (hi.coeffs - lo.coeffs) / h;
  return s;
}

// face_state with the nonphysical-reconstruction fallback applied.
MomentRep<double> safe_face_state(const CellField& field, int i, int j, int axis,
                                  bool high_side, const SpatialScheme& scheme) {
  try {
    return face_state(field, i, j, axis, high_side, scheme);
  } catch (const NonphysicalReconstruction&) {
    return field.at(i, j);
  }
}

}  // namespace

MomentRep<double> face_state(const CellField& field, int i, int j, int axis,
                             bool high_side, const SpatialScheme& scheme) {
  const MomentRep<double>& cell = field.at(i, j);
  if (scheme.order == 1) return cell;
  const Slope s = slope_along(field, i, j, axis);
  const Grid2D& g = field.grid();
  const double off =
      (high_side ? 0.5 : -0.5) * (axis == 0 ? g.dx[i] : g.dy[j]);
  MomentRep<double> w = cell;
  w.params.mean += off * s.mean;
  w.params.spread += off * s.spread;
  w.coeffs += off * s.coeffs;
  if (!(w.params.spread > 0))
    throw NonphysicalReconstruction("face_state: nonpositive temperature at cell (" +
                                    std::to_string(i) + "," + std::to_string(j) + ")");
  return w;
}

ReconstructionResult reconstruct(const CellField& field, const SpatialScheme& scheme) {
  const Grid2D& g = field.grid();
  ReconstructionResult out;
  out.x_faces.reserve(static_cast<size_t>(g.nx - 1) * g.ny);
  out.y_faces.reserve(static_cast<size_t>(g.nx) * (g.ny - 1));
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i + 1 < g.nx; ++i)
      out.x_faces.push_back({safe_face_state(field, i, j, 0, true, scheme),
                             safe_face_state(field, i + 1, j, 0, false, scheme)});
  for (int j = 0; j + 1 < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i)
      out.y_faces.push_back({safe_face_state(field, i, j, 1, true, scheme),
                             safe_face_state(field, i, j + 1, 1, false, scheme)});
  return out;
}

MomentRep<double> cell_residual(const CellField& field, int i, int j,
                                const Walls& walls, const CollisionModel& model,
                                const GasParams& gas, const SpatialScheme& scheme) {
  const Grid2D& g = field.grid();
  const MomentRep<double>& cell = field.at(i, j);

  // Flux through the face of (i, j) with normal +axis on the given side,
  // projected into the cell basis.
  auto face = [&](int axis, bool high_side) -> VecX<double> {
    const bool at_wall = axis == 0 ? (high_side ? i == g.nx - 1 : i == 0)
                                   : (high_side ? j == g.ny - 1 : j == 0);
    if (at_wall) {
      const WallSpec& wall = axis == 0 ? (high_side ? walls.right : walls.left)
                                       : (high_side ? walls.top : walls.bottom);
      return project(wall_flux(cell, axis, high_side, wall), cell.params).coeffs;
    }
    const int ni = axis == 0 ? (high_side ? i + 1 : i - 1) : i;
    const int nj = axis == 1 ? (high_side ? j + 1 : j - 1) : j;
    // Geometric left/right roles are fixed by index order so both adjacent
    // cells assemble the identical face-basis flux.
    const MomentRep<double> lo_state =
        safe_face_state(field, high_side ? i : ni, high_side ? j : nj, axis, true, scheme);
    const MomentRep<double> hi_state =
        safe_face_state(field, high_side ? ni : i, high_side ? nj : j, axis, false, scheme);
    return project(face_flux(lo_state, hi_state, axis, scheme.c_bound), cell.params)
        .coeffs;
  };

  MomentRep<double> r;
  r.order = field.order();
  r.params = cell.params;
  r.coeffs = collision_coeffs(cell, model, gas);
  r.coeffs -= (face(0, true) - face(0, false)) / g.dx[i];
  r.coeffs -= (face(1, true) - face(1, false)) / g.dy[j];
  return r;
}

std::vector<MomentRep<double>> residual(const CellField& field, const Walls& walls,
                                        const CollisionModel& model,
                                        const GasParams& gas,
                                        const SpatialScheme& scheme, int threads) {
  const Grid2D& g = field.grid();
  std::vector<MomentRep<double>> out(static_cast<size_t>(g.nx) * g.ny);
  std::exception_ptr failure;
#ifdef _OPENMP
#pragma omp parallel for collapse(2) schedule(static) num_threads(threads)
#endif
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      try {
        out[field.index(i, j)] = cell_residual(field, i, j, walls, model, gas, scheme);
      } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
        if (!failure) failure = std::current_exception();
      }
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace momg
