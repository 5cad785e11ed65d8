#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "doctest.h"
#include "momg/hermite.hpp"
#include "momg/multi_index.hpp"
#include "oracles.hpp"

using momg::IndexSet;
using momg::index_set;

TEST_CASE("index set size follows the tetrahedral count") {
  CHECK(IndexSet::count(3) == 20);
  CHECK(IndexSet::count(5) == 56);
  CHECK(IndexSet::count(10) == 286);
  CHECK(index_set(3).size() == 20);
  CHECK(index_set(5).size() == 56);
}

TEST_CASE("index set enumeration is graded with fixed low-order slots") {
  const IndexSet& set = index_set(5);
  CHECK(set[0].a1 == 0);
  CHECK(set[0].a2 == 0);
  CHECK(set[0].a3 == 0);
  // Slots 1..3 are the unit indices e1, e2, e3 in axis order.
  for (int d = 0; d < 3; ++d) {
    CHECK(set[1 + d].degree() == 1);
    CHECK(set[1 + d][d] == 1);
  }
  int prev = 0;
  for (int k = 0; k < set.size(); ++k) {
    const int deg = set.degree(k);
    CHECK(deg >= prev);  // degrees never decrease along the enumeration
    CHECK(deg == set[k].degree());
    prev = deg;
    CHECK(set.find(set[k].a1, set[k].a2, set[k].a3) == k);
  }
  CHECK(set.find(6, 0, 0) == -1);  // beyond truncation order
}

TEST_CASE("index set neighbor tables invert each other") {
  const IndexSet& set = index_set(4);
  for (int k = 0; k < set.size(); ++k) {
    for (int d = 0; d < 3; ++d) {
      const int up = set.up(k, d);
      if (up >= 0) {
        CHECK(set.down(up, d) == k);
        CHECK(set.degree(up) == set.degree(k) + 1);
      } else {
        CHECK(set.degree(k) == 4);  // only top-degree indices lack an up
      }
      const int down = set.down(k, d);
      if (set[k][d] == 0) {
        CHECK(down == -1);
      } else {
        CHECK(set.up(down, d) == k);
      }
    }
  }
}

TEST_CASE("index set factorial is the product of component factorials") {
  const IndexSet& set = index_set(5);
  CHECK(set.factorial(set.find(3, 2, 0)) == doctest::Approx(12.0));
  CHECK(set.factorial(set.find(2, 2, 1)) == doctest::Approx(4.0));
  CHECK(set.factorial(set.find(0, 0, 0)) == doctest::Approx(1.0));
  CHECK(set.factorial(set.find(5, 0, 0)) == doctest::Approx(120.0));
}

TEST_CASE("hermite_eval matches explicit low-degree polynomials") {
  CHECK(momg::hermite_eval(0, 0.7) == doctest::Approx(1.0));
  CHECK(momg::hermite_eval(1, 0.7) == doctest::Approx(0.7));
  CHECK(momg::hermite_eval(2, 0.0) == doctest::Approx(-1.0));
  CHECK(momg::hermite_eval(3, 2.0) == doctest::Approx(2.0));  // 8 - 6
  std::mt19937 rng(1234);
  std::uniform_real_distribution<double> dist(-5.0, 5.0);
  for (int trial = 0; trial < 50; ++trial) {
    const double x = dist(rng);
    CHECK(momg::hermite_eval(4, x) ==
          doctest::Approx(x * x * x * x - 6.0 * x * x + 3.0).epsilon(1e-12));
  }
}

TEST_CASE("hermite_eval satisfies the three-term recurrence") {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> dist(-5.0, 5.0);
  for (int trial = 0; trial < 40; ++trial) {
    const double x = dist(rng);
    for (int n = 1; n <= 12; ++n) {
      const double lhs = momg::hermite_eval(n + 1, x);
      const double rhs =
          x * momg::hermite_eval(n, x) - n * momg::hermite_eval(n - 1, x);
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
    }
  }
  // Cross-check against the independent oracle recurrence.
  for (int n = 0; n <= 10; ++n) {
    CHECK(momg::hermite_eval(n, 1.3) ==
          doctest::Approx(oracle::he_poly(n, 1.3)).epsilon(1e-13));
  }
}

TEST_CASE("max_hermite_root agrees with closed forms and bisection") {
  CHECK(momg::max_hermite_root(2) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(momg::max_hermite_root(4) ==
        doctest::Approx(std::sqrt(3.0 + std::sqrt(6.0))).epsilon(1e-12));
  const double r6 = momg::max_hermite_root(6);
  CHECK(r6 == doctest::Approx(oracle::max_he_root_bisect(6)).epsilon(1e-11));
  CHECK(r6 == doctest::Approx(3.324257).epsilon(1e-6));
  // The polynomial vanishes at the root itself to round-off.
  CHECK(std::abs(momg::hermite_eval(6, r6)) < 1e-10);
  // At the root rounded to six digits the residual is slope-limited:
  // |He_6'(r6)| ~ 531, offset ~ 2.6e-6, so ~1.4e-3.
  CHECK(std::abs(momg::hermite_eval(6, 3.32426)) < 2e-3);
  for (int n = 3; n <= 11; ++n) {
    CHECK(momg::max_hermite_root(n) ==
          doctest::Approx(oracle::max_he_root_bisect(n)).epsilon(1e-11));
  }
}
