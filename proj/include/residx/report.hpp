#pragma once

// One row of empirical counts, heuristic sums and the density prediction
// for a fixed (g, t, x).

#include "residx/arith.hpp"
#include "residx/decompose.hpp"
#include "residx/fraction.hpp"

namespace residx {

struct CountReport {
  Rational g;
  u64 t = 1;
  u64 x = 0;
  u64 N = 0;
  u64 R = 0;
  u64 pi_t = 0;     // pi(x;t,1) over counted primes
  u64 split_t = 0;  // primes splitting completely in Q(zeta_t, sqrt(g0))
  double naive = 0;
  double quadratic = 0;
  Fraction M;
  double A = 0;
  double A_error = 0;
  double Li = 0;

  double A_times_Li() const { return A * Li; }
  /// N / (A Li); NaN when A is zero to within its error bound.
  double ratio_N_over_ALi() const;
};

/// All counts and sums come from one pass over the counted primes <= x.
CountReport make_count_report(const GDecomposition& dec, u64 t, u64 x,
                              const PrimeTable& table, double tol,
                              unsigned threads = 1);

}  // namespace residx
