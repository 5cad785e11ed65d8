#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "momg/halfspace.hpp"
#include "oracles.hpp"

namespace {

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace

TEST_CASE("half-range pairing table frozen values at a = 0") {
  momg::HalfRangeTable<double> table(6, 0.0);
  const double inv_root_2pi = 1.0 / std::sqrt(8.0 * std::atan(1.0));
  CHECK(table.upper(0, 0) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(table.upper(1, 1) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(table.upper(0, 1) == doctest::Approx(inv_root_2pi).epsilon(1e-14));
  CHECK(table.upper(1, 0) == doctest::Approx(inv_root_2pi).epsilon(1e-14));
  // He_2 pairing with 1 over a half line integrates to He_1(0) phi(0) = 0.
  CHECK(table.upper(0, 2) == doctest::Approx(0.0));
  CHECK(table.lower(0, 0) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(table.lower(1, 1) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(table.lower(0, 1) == doctest::Approx(-inv_root_2pi).epsilon(1e-12));
}

TEST_CASE("half-range table matches quadrature oracle") {
  const double cuts[] = {-2.0, -0.6, 0.0, 0.9, 2.3};
  for (double a : cuts) {
    momg::HalfRangeTable<double> table(12, a);
    for (int m = 0; m <= 12; ++m) {
      for (int n = 0; n <= 12; ++n) {
        const double want = oracle::half_pairing(m, n, a);
        const double scale = std::max(1.0, std::sqrt(factorial(m) * factorial(n)));
        CHECK(std::abs(table.upper(m, n) - want) <= 1e-11 * scale);
      }
    }
  }
}

TEST_CASE("half-range table is symmetric in its indices") {
  const double cuts[] = {-1.3, 0.0, 0.4, 1.8};
  for (double a : cuts) {
    momg::HalfRangeTable<double> table(16, a);
    for (int m = 0; m <= 16; ++m) {
      for (int n = 0; n < m; ++n) {
        const double scale =
            std::max(1.0, std::sqrt(factorial(m) * factorial(n)));
        CHECK(std::abs(table.upper(m, n) - table.upper(n, m)) <= 1e-11 * scale);
      }
    }
  }
}

TEST_CASE("lower half integrals match direct quadrature") {
  const double a = 0.7;
  momg::HalfRangeTable<double> table(8, a);
  const double inv_root_2pi = 1.0 / std::sqrt(8.0 * std::atan(1.0));
  for (int m = 0; m <= 8; ++m) {
    for (int n = 0; n <= 8; ++n) {
      const double want = oracle::integrate(
          [&](double v) {
            return oracle::he_poly(m, v) * oracle::he_poly(n, v) *
                   std::exp(-0.5 * v * v) * inv_root_2pi;
          },
          a - 30.0, a);
      const double scale = std::max(1.0, std::sqrt(factorial(m) * factorial(n)));
      CHECK(std::abs(table.lower(m, n) - want) <= 1e-10 * scale);
    }
  }
}

TEST_CASE("upper plus lower reproduces full-line orthogonality") {
  momg::HalfRangeTable<double> table(10, 0.35);
  for (int m = 0; m <= 10; ++m) {
    for (int n = 0; n <= 10; ++n) {
      const double full = table.upper(m, n) + table.lower(m, n);
      const double want = (m == n) ? factorial(n) : 0.0;
      CHECK(full == doctest::Approx(want).epsilon(1e-14));
    }
  }
}

TEST_CASE("cut far in the tail makes the upper table vanish") {
  momg::HalfRangeTable<double> table(6, 12.0);
  for (int m = 0; m <= 6; ++m)
    for (int n = 0; n <= 6; ++n)
      CHECK(std::abs(table.upper(m, n)) < 1e-18);
  momg::HalfRangeTable<double> table_low(6, -12.0);
  for (int n = 0; n <= 6; ++n)
    CHECK(table_low.upper(n, n) == doctest::Approx(factorial(n)).epsilon(1e-13));
}
