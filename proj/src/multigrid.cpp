#include "momg/multigrid.hpp"

#include <chrono>
#include <cmath>

#include "momg/projection.hpp"

namespace momg {

namespace {

Grid2D coarsen(const Grid2D& fine) {
  Grid2D g;
  g.nx = fine.nx / 2;
  g.ny = fine.ny / 2;
  g.Lx = fine.Lx;
  g.Ly = fine.Ly;
  g.dx.resize(g.nx);
  g.dy.resize(g.ny);
  g.xc.resize(g.nx);
  g.yc.resize(g.ny);
  double x = 0.0;
  for (int i = 0; i < g.nx; ++i) {
    g.dx[i] = fine.dx[2 * i] + fine.dx[2 * i + 1];
    g.xc[i] = x + 0.5 * g.dx[i];
    x += g.dx[i];
  }
  double y = 0.0;
  for (int j = 0; j < g.ny; ++j) {
    g.dy[j] = fine.dy[2 * j] + fine.dy[2 * j + 1];
    g.yc[j] = y + 0.5 * g.dy[j];
    y += g.dy[j];
  }
  return g;
}

bool can_coarsen(const Grid2D& g) {
  return g.nx % 2 == 0 && g.ny % 2 == 0 && g.nx / 2 >= min_coarse_cells &&
         g.ny / 2 >= min_coarse_cells;
}

}  // namespace

GridHierarchy GridHierarchy::build(const Grid2D& finest, int levels) {
  if (levels < 0) throw ConfigError("hierarchy: level count must be positive");
  GridHierarchy h;
  h.grids.push_back(finest);
  if (levels == 0) {
    while (can_coarsen(h.grids.front()))
      h.grids.insert(h.grids.begin(), coarsen(h.grids.front()));
    return h;
  }
  for (int k = 1; k < levels; ++k) {
    const Grid2D& top = h.grids.front();
    if (top.nx % 2 != 0 || top.ny % 2 != 0)
      throw ConfigError("hierarchy: " + std::to_string(levels) +
                        " levels need cell counts divisible by 2 at each split");
    if (!can_coarsen(top))
      throw ConfigError("hierarchy: " + std::to_string(levels) +
                        " levels would make the coarsest grid smaller than " +
                        std::to_string(min_coarse_cells) + " cells");
    h.grids.insert(h.grids.begin(), coarsen(top));
  }
  return h;
}

CellField restrict_solution(const CellField& fine, const Grid2D& coarse) {
  const Grid2D& fg = fine.grid();
  if (fg.nx != 2 * coarse.nx || fg.ny != 2 * coarse.ny)
    throw ConfigError("restrict_solution: grids are not a 2x2 refinement pair");
  CellField out(coarse, fine.order());
  for (int J = 0; J < coarse.ny; ++J) {
    for (int I = 0; I < coarse.nx; ++I) {
      const MomentRep<double>* child[4];
      double area[4];
      for (int c = 0; c < 4; ++c) {
        const int i = 2 * I + c % 2, j = 2 * J + c / 2;
        child[c] = &fine.at(i, j);
        area[c] = fg.area(i, j);
      }
      // Conservation of mass, momentum, and energy over the four children
      // determines the coarse bulk state.
      double S = 0.0, mass = 0.0, energy = 0.0;
      Vec3<double> momentum = Vec3<double>::Zero();
      for (int c = 0; c < 4; ++c) {
        const double rho = child[c]->coeffs[0];
        const Vec3<double>& u = child[c]->params.mean;
        const double theta = child[c]->params.spread;
        S += area[c];
        mass += rho * area[c];
        momentum += rho * u * area[c];
        energy += rho * (3.0 * theta + u.squaredNorm()) * area[c];
      }
      BasisParams<double> basis;
      const double rho_H = mass / S;
      basis.mean = momentum / mass;
      basis.spread =
          (energy / S - rho_H * basis.mean.squaredNorm()) / (3.0 * rho_H);
      if (!(rho_H > 0.0) || !(basis.spread > 0.0))
        throw NonphysicalState("restrict_solution: nonphysical coarse state at (" +
                               std::to_string(I) + "," + std::to_string(J) + ")");
      MomentRep<double>& cell = out.at(I, J);
      cell.order = fine.order();
      cell.params = basis;
      cell.coeffs = VecX<double>::Zero(IndexSet::count(fine.order()));
      for (int c = 0; c < 4; ++c)
        cell.coeffs += (area[c] / S) * project(*child[c], basis).coeffs;
      grad_normalize(cell);
    }
  }
  return out;
}

std::vector<MomentRep<double>> restrict_residual(
    const std::vector<MomentRep<double>>& fine_arrays, const CellField& fine,
    const CellField& coarse) {
  const Grid2D& fg = fine.grid();
  const Grid2D& cg = coarse.grid();
  if (fg.nx != 2 * cg.nx || fg.ny != 2 * cg.ny)
    throw ConfigError("restrict_residual: grids are not a 2x2 refinement pair");
  std::vector<MomentRep<double>> out(static_cast<size_t>(cg.nx) * cg.ny);
  for (int J = 0; J < cg.ny; ++J) {
    for (int I = 0; I < cg.nx; ++I) {
      const BasisParams<double>& basis = coarse.at(I, J).params;
      MomentRep<double>& r = out[coarse.index(I, J)];
      r.order = fine.order();
      r.params = basis;
      r.coeffs = VecX<double>::Zero(IndexSet::count(fine.order()));
      double S = 0.0;
      for (int c = 0; c < 4; ++c) {
        const int i = 2 * I + c % 2, j = 2 * J + c / 2;
        S += fg.area(i, j);
      }
      for (int c = 0; c < 4; ++c) {
        const int i = 2 * I + c % 2, j = 2 * J + c / 2;
        r.coeffs += (fg.area(i, j) / S) *
                    project(fine_arrays[fine.index(i, j)], basis).coeffs;
      }
    }
  }
  return out;
}

void fas_correct(CellField& fine, const CellField& coarse_before,
                 const CellField& coarse_after) {
  const Grid2D& fg = fine.grid();
  const Grid2D& cg = coarse_before.grid();
  if (fg.nx != 2 * cg.nx || fg.ny != 2 * cg.ny)
    throw ConfigError("fas_correct: grids are not a 2x2 refinement pair");
  for (int j = 0; j < fg.ny; ++j) {
    for (int i = 0; i < fg.nx; ++i) {
      MomentRep<double>& cell = fine.at(i, j);
      const int I = i / 2, J = j / 2;
      cell.coeffs += project(coarse_after.at(I, J), cell.params).coeffs -
                     project(coarse_before.at(I, J), cell.params).coeffs;
      try {
        grad_normalize(cell);
      } catch (const NonphysicalState& e) {
        throw SolverError("coarse-grid correction left cell (" + std::to_string(i) +
                          "," + std::to_string(j) + ") nonphysical: " + e.what());
      }
    }
  }
}

void nmg_cycle(const GridHierarchy& hierarchy, int level, CellField& field,
               const RhsField& rhs, const SolveContext& ctx,
               const CyclePolicy& policy, WorkStats* work) {
  if (level == 0) {
    for (int s = 0; s < policy.s3; ++s) fast_sweep_step(field, rhs, ctx, work);
    return;
  }
  for (int s = 0; s < policy.s1; ++s) fast_sweep_step(field, rhs, ctx, work);

  // Coarse problem: R_H(f) = R_H(restricted f) + restricted (r - R(f)).
  const std::vector<MomentRep<double>> res =
      residual(field, ctx.walls, ctx.model, ctx.gas, ctx.scheme, ctx.threads);
  std::vector<MomentRep<double>> defect(res.size());
  for (size_t k = 0; k < res.size(); ++k) {
    defect[k] = res[k];
    if (rhs.empty())
      defect[k].coeffs = -res[k].coeffs;
    else
      defect[k].coeffs = project(rhs[k], res[k].params).coeffs - res[k].coeffs;
  }

  CellField coarse = restrict_solution(field, hierarchy.grids[level - 1]);
  const CellField coarse_before = coarse;
  RhsField coarse_rhs = restrict_residual(defect, field, coarse);
  const std::vector<MomentRep<double>> coarse_res =
      residual(coarse, ctx.walls, ctx.model, ctx.gas, ctx.scheme, ctx.threads);
  for (size_t k = 0; k < coarse_rhs.size(); ++k)
    coarse_rhs[k].coeffs += coarse_res[k].coeffs;

  for (int g = 0; g < policy.gamma; ++g)
    nmg_cycle(hierarchy, level - 1, coarse, coarse_rhs, ctx, policy, work);

  fas_correct(field, coarse_before, coarse);
  for (int s = 0; s < policy.s2; ++s) fast_sweep_step(field, rhs, ctx, work);
}

double residual_norm(const std::vector<MomentRep<double>>& residuals,
                     const CellField& field) {
  const Grid2D& g = field.grid();
  const IndexSet& set = index_set(field.order());
  double total = 0.0;
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      const double theta = field.at(i, j).params.spread;
      const VecX<double>& r = residuals[field.index(i, j)].coeffs;
      double cell = 0.0;
      for (int k = 0; k < set.size(); ++k)
        cell += set.factorial(k) * std::pow(theta, set[k].degree()) * r[k] * r[k];
      total += cell * g.area(i, j);
    }
  }
  return std::sqrt(total / (g.Lx * g.Ly));
}

namespace {

/// Natural magnitude of the residual of an O(1)-varying field: transport
/// plus collision rates, used to recognize an already-steady start.
double residual_scale(const CellField& field, const SolveContext& ctx) {
  const Grid2D& g = field.grid();
  double s = 0.0;
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      const MomentRep<double>& c = field.at(i, j);
      const double rho = c.coeffs[0];
      const double theta = c.params.spread;
      const double nu = collision_frequency(rho, theta, ctx.model, ctx.gas);
      s = std::max(s, rho * (ctx.cfl.c_bound * std::sqrt(theta) *
                                 (1.0 / g.dx[i] + 1.0 / g.dy[j]) +
                             nu));
    }
  }
  return s;
}

}  // namespace

SolveReport solve_steady(CellField& field, const SolveContext& ctx,
                         const SolverOptions& options) {
  const auto t0 = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
  };

  SolveReport report;
  WorkStats work;
  const int cap = options.max_iterations > 0
                      ? options.max_iterations
                      : (options.kind == SolverKind::nmg ? 200 : 100000);

  std::vector<MomentRep<double>> res =
      residual(field, ctx.walls, ctx.model, ctx.gas, ctx.scheme, ctx.threads);
  report.r0_norm = residual_norm(res, field);
  if (report.r0_norm <= 1e-12 * residual_scale(field, ctx)) {
    report.converged = true;
    report.final_norm = report.r0_norm;
    report.final_ratio = 0.0;
    report.seconds = elapsed();
    return report;
  }

  GridHierarchy hierarchy;
  if (options.kind == SolverKind::nmg)
    hierarchy = GridHierarchy::build(field.grid(), options.levels);

  const double target_mass = total_mass(field);
  for (int n = 1; n <= cap; ++n) {
    try {
      switch (options.kind) {
        case SolverKind::euler:
          euler_step(field, res, {}, ctx);
          break;
        case SolverKind::fs:
          fast_sweep_step(field, {}, ctx, &work);
          break;
        case SolverKind::nmg:
          nmg_cycle(hierarchy, hierarchy.finest_level(), field, {}, ctx,
                    options.cycle, &work);
          break;
      }
      mass_correction(field, target_mass);
      res = residual(field, ctx.walls, ctx.model, ctx.gas, ctx.scheme, ctx.threads);
    } catch (const SolverError& e) {
      report.work = work.cell_evals;
      report.seconds = elapsed();
      throw NonConvergence(std::string("iteration step failed: ") + e.what(),
                           report);
    } catch (const NonphysicalState& e) {
      report.work = work.cell_evals;
      report.seconds = elapsed();
      throw NonConvergence(std::string("iteration left the field nonphysical: ") +
                               e.what(),
                           report);
    }
    report.iterations = n;
    report.final_norm = residual_norm(res, field);
    report.final_ratio = report.final_norm / report.r0_norm;
    report.history.push_back({n, report.final_ratio, elapsed()});
    report.work = work.cell_evals;
    report.seconds = elapsed();
    if (!std::isfinite(report.final_ratio) || report.final_ratio > 1e6)
      throw NonConvergence("residual diverged: ratio " +
                               std::to_string(report.final_ratio) + " at iteration " +
                               std::to_string(n),
                           report);
    if (report.final_ratio <= options.tol) {
      report.converged = true;
      return report;
    }
  }
  throw NonConvergence("iteration cap " + std::to_string(cap) +
                           " reached at ratio " + std::to_string(report.final_ratio),
                       report);
}

}  // namespace momg
