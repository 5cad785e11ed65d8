#include "momg/single_level.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "momg/projection.hpp"

namespace momg {

double local_dt(const Vec3<double>& u, double theta, double dx, double dy,
                const CflPolicy& policy) {
  if (!(theta > 0.0))
    throw NonphysicalState("local_dt: nonpositive temperature " + std::to_string(theta));
  const double c = policy.c_bound * std::sqrt(theta);
  return policy.cfl / ((std::abs(u[0]) + c) / dx + (std::abs(u[1]) + c) / dy);
}

double local_dt(const MomentRep<double>& cell, double dx, double dy,
                const CflPolicy& policy) {
  return local_dt(cell.params.mean, cell.params.spread, dx, dy, policy);
}

double global_dt(const CellField& field, const CflPolicy& policy) {
  const Grid2D& g = field.grid();
  double dt = std::numeric_limits<double>::infinity();
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i)
      dt = std::min(dt, local_dt(field.at(i, j), g.dx[i], g.dy[j], policy));
  return dt;
}

namespace {

/// f <- f + dt*delta followed by re-normalization; on a nonphysical result
/// the update is retried once from the saved state with dt/2.
void apply_update(MomentRep<double>& cell, const VecX<double>& delta, double dt,
                  int i, int j) {
  const MomentRep<double> saved = cell;
  cell.coeffs += dt * delta;
  try {
    grad_normalize(cell);
    return;
  } catch (const NonphysicalState&) {
    cell = saved;
  }
  cell.coeffs += 0.5 * dt * delta;
  try {
    grad_normalize(cell);
  } catch (const NonphysicalState& e) {
    cell = saved;
    throw SolverError("update left cell (" + std::to_string(i) + "," +
                      std::to_string(j) + ") nonphysical after dt halving: " + e.what());
  }
}

VecX<double> update_delta(const MomentRep<double>& cell,
                          const MomentRep<double>& residual_ij,
                          const RhsField& rhs, int flat_index) {
  VecX<double> delta = residual_ij.coeffs;
  if (!rhs.empty()) delta -= project(rhs[flat_index], cell.params).coeffs;
  return delta;
}

}  // namespace

void euler_step(CellField& field, const std::vector<MomentRep<double>>& residuals,
                const RhsField& rhs, const SolveContext& ctx) {
  const Grid2D& g = field.grid();
  const double dt = global_dt(field, ctx.cfl);
  std::exception_ptr failure;
#ifdef _OPENMP
#pragma omp parallel for collapse(2) schedule(static) num_threads(ctx.threads)
#endif
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      try {
        MomentRep<double>& cell = field.at(i, j);
        const int k = field.index(i, j);
        apply_update(cell, update_delta(cell, residuals[k], rhs, k), dt, i, j);
      } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
        if (!failure) failure = std::current_exception();
      }
    }
  }
  if (failure) std::rethrow_exception(failure);
}

namespace {

/// One Gauss-Seidel visit of cell (i, j): local dt from the current cell
/// state, residual from the newest neighbor values, in-place update.
void sweep_cell(CellField& field, int i, int j, const RhsField& rhs,
                const SolveContext& ctx) {
  const Grid2D& g = field.grid();
  MomentRep<double>& cell = field.at(i, j);
  const double dt = local_dt(cell, g.dx[i], g.dy[j], ctx.cfl);
  const MomentRep<double> res =
      cell_residual(field, i, j, ctx.walls, ctx.model, ctx.gas, ctx.scheme);
  apply_update(cell, update_delta(cell, res, rhs, field.index(i, j)), dt, i, j);
}

struct SweepDir {
  bool i_up, j_up;
};
constexpr SweepDir kSweepDirs[4] = {
    {true, true}, {false, true}, {false, false}, {true, false}};

}  // namespace

void fast_sweep_step(CellField& field, const RhsField& rhs, const SolveContext& ctx,
                     WorkStats* work, const std::array<int, 4>& sweep_order) {
  const Grid2D& g = field.grid();
  std::atomic<long long> evals{0};
  std::exception_ptr failure;
  const int threads = std::max(1, std::min(ctx.threads, g.nx));

  for (int s : sweep_order) {
    const SweepDir dir = kSweepDirs[s];
#ifdef _OPENMP
#pragma omp parallel num_threads(threads)
#endif
    {
#ifdef _OPENMP
      const int tid = omp_get_thread_num();
      const int nt = omp_get_num_threads();
#else
      const int tid = 0;
      const int nt = 1;
#endif
      // Contiguous block of the outer (i) loop per worker.
      const int lo = static_cast<int>(static_cast<long long>(g.nx) * tid / nt);
      const int hi = static_cast<int>(static_cast<long long>(g.nx) * (tid + 1) / nt);
      long long local_evals = 0;
      try {
        for (int step = 0; step < hi - lo; ++step) {
          const int i = dir.i_up ? lo + step : hi - 1 - step;
          for (int jj = 0; jj < g.ny; ++jj) {
            const int j = dir.j_up ? jj : g.ny - 1 - jj;
            sweep_cell(field, i, j, rhs, ctx);
            ++local_evals;
          }
        }
      } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
        if (!failure) failure = std::current_exception();
      }
      evals += local_evals;
    }
    if (failure) break;
  }
  if (work) work->cell_evals += evals.load();
  if (failure) std::rethrow_exception(failure);
}

double total_mass(const CellField& field) {
  const Grid2D& g = field.grid();
  double mass = 0.0;
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) mass += field.at(i, j).coeffs[0] * g.area(i, j);
  return mass;
}

void mass_correction(CellField& field, double target_mass) {
  const double current = total_mass(field);
  if (!(current > 0.0) || !std::isfinite(current))
    throw NonphysicalState("mass_correction: nonpositive total mass " +
                           std::to_string(current));
  const double c = target_mass / current;
  for (int k = 0; k < field.size(); ++k) field[k].coeffs *= c;
}

}  // namespace momg
