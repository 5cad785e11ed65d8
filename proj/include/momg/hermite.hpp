#pragma once

#include "momg/types.hpp"

namespace momg {

/// Probabilists' Hermite polynomial He_n(x):
///   He_0 = 1, He_1 = x, He_{n+1} = x He_n - n He_{n-1}.
template <typename Scalar>
Scalar hermite_eval(int degree, Scalar x) {
  if (degree < 0) throw Error("hermite_eval: negative degree");
  Scalar p0 = Scalar(1);
  if (degree == 0) return p0;
  Scalar p1 = x;
  for (int n = 1; n < degree; ++n) {
    const Scalar p2 = x * p1 - Scalar(n) * p0;
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

/// Largest zero of He_degree, computed as the top eigenvalue of the symmetric
/// tridiagonal recurrence (Jacobi) matrix with off-diagonal sqrt(k).
/// Results are cached; warm the degrees you need before parallel regions.
double max_hermite_root(int degree);

}  // namespace momg
