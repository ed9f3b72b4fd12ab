#pragma once

// Field degrees [Q(zeta_t, g^(1/t)) : Q], the density A(g,t), the sums
// S(h,t,m) and the Artin constant, each truncated with a certified bound.

#include "residx/arith.hpp"
#include "residx/decompose.hpp"
#include "residx/fraction.hpp"

namespace residx {

/// [Q(zeta_t, g^(1/t)) : Q] = phi(t) t_h / nu with nu in {1/2, 1, 2}.
struct DegreeResult {
  u64 t = 1;
  u64 degree = 1;
  Fraction nu = 1;
};

DegreeResult kummer_degree(const GDecomposition& dec, u64 t);

/// A truncated series or product together with a rigorous bound on the
/// neglected part.
struct TruncatedValue {
  double value = 0.0;
  u64 cutoff = 0;         // last k (or largest prime) included
  double error_bound = 0; // |true value - value| <= error_bound
};

/// A(g,t) = sum_k mu(k) / [Q(zeta_kt, g^(1/kt)) : Q] with error <= tol.
TruncatedValue artin_density_A(const GDecomposition& dec, u64 t, double tol);
/// The same sum cut at a fixed K (no error target).
TruncatedValue artin_density_A_upto(const GDecomposition& dec, u64 t, u64 K);

/// S(h,t,m) = sum over k with m | kt of mu(k) (kt,h) / (kt phi(kt)).
TruncatedValue wagstaff_sum_S(u64 h, u64 t, u64 m, double tol);

/// prod over primes q of (1 - 1/(q(q-1))), error <= tol.
TruncatedValue artin_constant(double tol);
/// prod over primes q <= qmax of (1 - 1/(q(q-1))).
double artin_partial_product(u64 qmax);

/// Rigorous bound on sum_{k > K} mu(k)^2 / (k phi(k)), K >= 7, given the
/// partial sum S_K = sum_{d <= K} mu(d)^2 / (d phi(d)).
double kphi_tail_bound(u64 K, double partial_sum);

}  // namespace residx
