#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "doctest.h"
#include "momg/moment_rep.hpp"
#include "momg/projection.hpp"
#include "oracles.hpp"
#include "test_helpers.hpp"

using momg::BasisParams;
using momg::MomentRep;
using momg::Vec3;
using momg::index_set;

namespace {

BasisParams<double> params(double m1, double m2, double m3, double s) {
  BasisParams<double> p;
  p.mean << m1, m2, m3;
  p.spread = s;
  return p;
}

}  // namespace

TEST_CASE("maxwellian_rep has unit shape in its own basis") {
  Vec3<double> u;
  u << 0.3, -0.1, 0.0;
  const auto rep = momg::maxwellian_rep(2.0, u, 1.7, 4);
  CHECK(rep.coeffs[0] == doctest::Approx(2.0));
  for (int k = 1; k < rep.coeffs.size(); ++k) CHECK(rep.coeffs[k] == 0.0);
  CHECK(rep.params.mean[0] == doctest::Approx(0.3));
  CHECK(rep.params.spread == doctest::Approx(1.7));
  CHECK(momg::rep_density(rep) == doctest::Approx(2.0));
  CHECK(momg::rep_velocity(rep)[1] == doctest::Approx(-0.1));
  CHECK(momg::rep_temperature(rep) == doctest::Approx(1.7));
  CHECK_THROWS_AS(momg::maxwellian_rep(-1.0, u, 1.0, 3),
                  momg::NonphysicalState);
  CHECK_THROWS_AS(momg::maxwellian_rep(1.0, u, 0.0, 3),
                  momg::NonphysicalState);
}

TEST_CASE("extract_macro reads stress and heat flux from coefficients") {
  // Grad-normalized rep: order-1 coefficients zero, order-2 trace zero.
  Vec3<double> u;
  u << 0.1, 0.2, 0.0;
  MomentRep<double> rep = momg::maxwellian_rep(1.5, u, 0.9, 3);
  const momg::IndexSet& set = index_set(3);
  rep.coeffs[set.find(1, 1, 0)] = 0.3;   // mixed second moment
  rep.coeffs[set.find(3, 0, 0)] = 0.25;  // pure third moment along axis 1
  const auto macro = momg::extract_macro(rep);
  CHECK(macro.rho == doctest::Approx(1.5));
  CHECK(macro.velocity[0] == doctest::Approx(0.1));
  CHECK(macro.theta == doctest::Approx(0.9));
  CHECK(macro.sigma(0, 1) == doctest::Approx(0.3));
  CHECK(macro.sigma(1, 0) == doctest::Approx(0.3));
  CHECK(macro.sigma(0, 0) == doctest::Approx(0.0));
  // q_1 = 2 f_(3,0,0) + sum_d f_(2e_d + e_1); the d = 1 term is f_(3,0,0)
  // again, so a lone pure-cubic coefficient contributes three times.
  CHECK(macro.heat_flux[0] == doctest::Approx(3.0 * 0.25));
  CHECK(macro.heat_flux[1] == doctest::Approx(0.0));
}

TEST_CASE("extract_macro of a diagonal-perturbed rep") {
  // Diagonal order-2 entries with zero trace: sigma_ii = 2 f_{2 e_i}.
  MomentRep<double> rep =
      momg::maxwellian_rep(1.0, momg::zero3(), 1.0, 3);
  const momg::IndexSet& set = index_set(3);
  rep.coeffs[set.find(2, 0, 0)] = 0.2;
  rep.coeffs[set.find(0, 2, 0)] = -0.15;
  rep.coeffs[set.find(0, 0, 2)] = -0.05;
  rep.coeffs[set.find(2, 1, 0)] = 0.1;  // contributes to q_2
  const auto macro = momg::extract_macro(rep);
  CHECK(macro.sigma(0, 0) == doctest::Approx(0.4));
  CHECK(macro.sigma(1, 1) == doctest::Approx(-0.3));
  CHECK(macro.sigma(2, 2) == doctest::Approx(-0.1));
  CHECK(macro.theta == doctest::Approx(1.0));
  CHECK(macro.heat_flux[1] == doctest::Approx(0.1));
}

TEST_CASE("projection to the same basis is the identity") {
  std::mt19937 rng(42);
  auto rep = testing_helpers::random_grad_rep(rng, 4);
  const auto out = momg::project(rep, rep.params);
  for (int k = 0; k < rep.coeffs.size(); ++k)
    CHECK(out.coeffs[k] == rep.coeffs[k]);
}

TEST_CASE("projection preserves every moment up to truncation order") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (int trial = 0; trial < 6; ++trial) {
    const int order = (trial % 2 == 0) ? 3 : 5;
    auto rep = testing_helpers::random_grad_rep(rng, order);
    BasisParams<double> to;
    for (int d = 0; d < 3; ++d)
      to.mean[d] = rep.params.mean[d] + 0.4 * unit(rng);
    to.spread = rep.params.spread * (1.0 + 0.35 * unit(rng));
    const auto out = momg::project(rep, to);
    const momg::IndexSet& set = index_set(order);
    for (int k = 0; k < set.size(); ++k) {
      const double before = oracle::raw_moment(rep, set[k].a1, set[k].a2,
                                               set[k].a3);
      const double after =
          oracle::raw_moment(out, set[k].a1, set[k].a2, set[k].a3);
      const double scale = std::max(1.0, std::abs(before));
      CHECK(std::abs(after - before) / scale < 1e-10);
    }
  }
}

TEST_CASE("projecting a maxwellian to a shifted basis matches quadrature") {
  Vec3<double> u;
  u << 0.5, 0.0, 0.0;
  const auto rep = momg::maxwellian_rep(1.0, u, 1.0, 4);
  const auto out = momg::project(rep, params(0.0, 0.0, 0.0, 1.0));
  // Moments of the standard maxwellian about the origin, via quadrature.
  CHECK(out.coeffs[0] == doctest::Approx(1.0).epsilon(1e-12));
  const momg::IndexSet& set = index_set(4);
  CHECK(out.coeffs[set.find(1, 0, 0)] == doctest::Approx(0.5).epsilon(1e-12));
  for (int k = 0; k < set.size(); ++k) {
    const double want =
        oracle::raw_moment(rep, set[k].a1, set[k].a2, set[k].a3);
    const double got =
        oracle::raw_moment(out, set[k].a1, set[k].a2, set[k].a3);
    CHECK(std::abs(got - want) < 1e-10 * std::max(1.0, std::abs(want)));
  }
}

TEST_CASE("projection round trip returns the original coefficients") {
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (int trial = 0; trial < 8; ++trial) {
    auto rep = testing_helpers::random_grad_rep(rng, 4);
    BasisParams<double> to;
    const double sqrt_spread = std::sqrt(rep.params.spread);
    for (int d = 0; d < 3; ++d)
      to.mean[d] = rep.params.mean[d] + sqrt_spread * unit(rng);
    to.spread = rep.params.spread * (0.5 + 1.5 * (0.5 + 0.5 * unit(rng)));
    auto there = momg::project(rep, to);
    auto back = momg::project(there, rep.params);
    for (int k = 0; k < rep.coeffs.size(); ++k) {
      CHECK(std::abs(back.coeffs[k] - rep.coeffs[k]) <
            1e-12 * std::max(1.0, std::abs(rep.coeffs[0])));
    }
  }
}

TEST_CASE("projection rejects nonpositive target spread") {
  std::mt19937 rng(5);
  auto rep = testing_helpers::random_grad_rep(rng, 3);
  CHECK_THROWS_AS(momg::project(rep, params(0, 0, 0, 0.0)),
                  momg::NonphysicalState);
  CHECK_THROWS_AS(momg::project(rep, params(0, 0, 0, -1.0)),
                  momg::NonphysicalState);
}

TEST_CASE("grad_normalize zeroes order-1 coefficients and order-2 trace") {
  std::mt19937 rng(77);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (int trial = 0; trial < 10; ++trial) {
    auto rep = testing_helpers::random_grad_rep(rng, 4);
    // Knock the rep off its bulk basis by an arbitrary re-projection.
    BasisParams<double> off;
    for (int d = 0; d < 3; ++d) off.mean[d] = rep.params.mean[d] + 0.3 * unit(rng);
    off.spread = rep.params.spread * (1.0 + 0.3 * unit(rng));
    auto moved = momg::project(rep, off);
    momg::grad_normalize(moved);
    CHECK(momg::grad_defect(moved) <= 1e-12);
    // Macro state is untouched: density, velocity, temperature agree.
    CHECK(momg::rep_density(moved) ==
          doctest::Approx(momg::rep_density(rep)).epsilon(1e-11));
    for (int d = 0; d < 3; ++d)
      CHECK(momg::rep_velocity(moved)[d] ==
            doctest::Approx(momg::rep_velocity(rep)[d]).epsilon(1e-10));
    CHECK(momg::rep_temperature(moved) ==
          doctest::Approx(momg::rep_temperature(rep)).epsilon(1e-10));
    // Idempotent: a second pass changes nothing beyond round-off.
    auto again = moved;
    momg::grad_normalize(again);
    for (int k = 0; k < moved.coeffs.size(); ++k)
      CHECK(std::abs(again.coeffs[k] - moved.coeffs[k]) <=
            1e-12 * std::max(1.0, std::abs(moved.coeffs[0])));
  }
}

TEST_CASE("grad_normalize rejects nonphysical density") {
  std::mt19937 rng(3);
  auto rep = testing_helpers::random_grad_rep(rng, 3);
  rep.coeffs[0] = -0.5;
  CHECK_THROWS_AS(momg::grad_normalize(rep), momg::NonphysicalState);
}

TEST_CASE("grad_defect measures relative off-basis content") {
  auto rep = momg::maxwellian_rep(2.0, momg::zero3(), 1.0, 3);
  CHECK(momg::grad_defect(rep) == doctest::Approx(0.0));
  const momg::IndexSet& set = index_set(3);
  rep.coeffs[set.find(1, 0, 0)] = 0.02;
  CHECK(momg::grad_defect(rep) == doctest::Approx(0.01));  // relative to f_0
}
