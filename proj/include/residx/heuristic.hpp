#pragma once

// Heuristic weights w_{g,t}(p) and r_{g,t}(p), the naive and quadratic sums
// for N_{g,t}(x), the quadratic heuristic H_{g,t}(x) for R_{g,t}(x) and the
// closed forms of M_{g,t}(x) = L + Q.

#include <gmpxx.h>

#include "residx/arith.hpp"
#include "residx/decompose.hpp"
#include "residx/empirical.hpp"
#include "residx/fraction.hpp"

namespace residx {

struct WeightContext {
  HeuristicParams params;
  GDecomposition dec;
  u64 p = 0;
  int legendre = 0;  // (d(g0)/p)
  unsigned v2p = 0;  // v2(p - 1)
};

/// Builds the context for an odd prime p counted for g.
WeightContext make_weight_context(const GDecomposition& dec,
                                  const HeuristicParams& params, u64 p);

/// w_{g,t}(p) in {0, 1, 2}. When eps1 = 0 the sign factor is not evaluated
/// (zero times an undefined quantity is zero).
int weight_w(const WeightContext& ctx);

/// r_{g,t}(p) in {0, 1, 2}; r / t_h is the probability that an element of
/// the class of g mod p has index divisible by t.
int weight_r(const WeightContext& ctx);

/// sum over counted p <= x, p = 1 (mod t) of phi((p-1)/t) / (p-1).
double sum_naive(const GDecomposition& dec, u64 t, u64 x,
                 const PrimeTable& table, unsigned threads = 1);

/// (h,t) * sum over counted p <= x, p = 1 (mod t) of
/// w_{g,t}(p) phi((p-1)/t) / (p-1).
double sum_quadratic(const GDecomposition& dec, u64 t, u64 x,
                     const PrimeTable& table, unsigned threads = 1);

/// The same sum in exact rational arithmetic.
mpq_class sum_quadratic_exact(const GDecomposition& dec, u64 t, u64 x,
                              const PrimeTable& table);

/// H_{g,t}(x) = (1/t_h) sum over counted p <= x, p = 1 (mod t) of r_{g,t}(p).
Fraction sum_divisible_H(const GDecomposition& dec, u64 t, u64 x,
                         const PrimeTable& table, unsigned threads = 1);

/// M_{g,t}(x) from the case table in pi(x;t,1), pi(x;2t,1) and the split
/// counts of Q(zeta_t, sqrt(g0)), Q(zeta_2t, sqrt(g0)).
Fraction closed_form_M(const GDecomposition& dec, u64 t, u64 x,
                       const PrimeTable& table);
Fraction closed_form_M(const GDecomposition& dec, u64 t,
                       const ProgressionCounts& counts);

/// Closed form of M from the four counts it depends on.
Fraction closed_form_M(const GDecomposition& dec, u64 t, u64 pi_t, u64 pi_2t,
                       u64 split_t, u64 split_2t);

/// sum_{k >= 1} mu(k) M_{g,kt}(x), exactly. Terms with kt >= x vanish.
mpq_class moebius_sum_M_exact(const GDecomposition& dec, u64 t,
                              const ProgressionCounts& counts,
                              const PrimeTable& table);

/// Factorization of (p-1)/t given p-1 factored; t must divide p-1.
Factorization divide_factorization(const Factorization& f, u64 t);

/// w_{g,t}(p) (h,t) phi((p-1)/t) / (p-1): the weighted density of elements of
/// index exactly t in the class of g mod p.
Fraction weighted_exact_density(const GDecomposition& dec, u64 t, u64 p,
                                const Factorization& pm1);

/// sum_{d | (p-1)/t} mu(d) r_{g,dt}(p) (h,dt) / (dt).
Fraction exact_density_from_r(const GDecomposition& dec, u64 t, u64 p,
                              const Factorization& pm1);

/// t_h * sum_{d | (p-1)/t} w_{g,dt}(p) (h,dt) phi((p-1)/dt) / (p-1); equals
/// r_{g,t}(p).
Fraction r_from_w(const GDecomposition& dec, u64 t, u64 p,
                  const Factorization& pm1);

/// Sum of rationals by pairwise splitting (keeps intermediate sizes small).
mpq_class exact_sum(std::vector<mpq_class> terms);

}  // namespace residx
