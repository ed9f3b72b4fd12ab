#include "residx/report.hpp"

#include <cmath>
#include <limits>

#include "residx/density.hpp"
#include "residx/empirical.hpp"
#include "residx/heuristic.hpp"

namespace residx {

namespace {

struct RowAcc {
  u64 N = 0, R = 0, pi_t = 0, pi_2t = 0, split_t = 0, split_2t = 0;
  double naive = 0, weighted = 0;

  RowAcc& operator+=(const RowAcc& o) {
    N += o.N;
    R += o.R;
    pi_t += o.pi_t;
    pi_2t += o.pi_2t;
    split_t += o.split_t;
    split_2t += o.split_2t;
    naive += o.naive;
    weighted += o.weighted;
    return *this;
  }
};

}  // namespace

double CountReport::ratio_N_over_ALi() const {
  // A within its truncation bound of 0 is indistinguishable from 0
  const double pred = A_times_Li();
  if (pred == 0 || std::abs(A) <= A_error) return std::numeric_limits<double>::quiet_NaN();
  return static_cast<double>(N) / pred;
}

CountReport make_count_report(const GDecomposition& dec, u64 t, u64 x,
                              const PrimeTable& table, double tol,
                              unsigned threads) {
  if (t == 0) fail(ErrorKind::domain, "t must be >= 1");
  if (x < 2) fail(ErrorKind::domain, "x must be >= 2");
  const HeuristicParams params = derive_params(dec, t);
  const RowAcc acc = reduce_counted_primes<RowAcc>(
      dec, x, table, threads, [&](RowAcc& a, const PrimeContext& c) {
        if ((c.p - 1) % t != 0) return;
        ++a.pi_t;
        if (c.legendre == 1) ++a.split_t;
        if ((c.p - 1) % (2 * t) == 0) {
          ++a.pi_2t;
          if (c.legendre == 1) ++a.split_2t;
        }
        if (c.index % t == 0) ++a.R;
        if (c.index == t) ++a.N;
        const double phi =
            static_cast<double>(euler_phi(divide_factorization(c.pm1, t)));
        const double pm1 = static_cast<double>(c.p - 1);
        a.naive += phi / pm1;
        WeightContext ctx;
        ctx.params = params;
        ctx.dec = dec;
        ctx.p = c.p;
        ctx.legendre = c.legendre;
        ctx.v2p = v2(c.p - 1);
        const int w = weight_w(ctx);
        if (w != 0) a.weighted += w * phi / pm1;
      });
  CountReport r;
  r.g = dec.g;
  r.t = t;
  r.x = x;
  r.N = acc.N;
  r.R = acc.R;
  r.pi_t = acc.pi_t;
  r.split_t = acc.split_t;
  r.naive = acc.naive;
  r.quadratic = static_cast<double>(params.gcd_ht) * acc.weighted;
  r.M = closed_form_M(dec, t, acc.pi_t, acc.pi_2t, acc.split_t, acc.split_2t);
  const TruncatedValue a = artin_density_A(dec, t, tol);
  r.A = a.value;
  r.A_error = a.error_bound;
  r.Li = log_integral(static_cast<double>(x));
  return r;
}

}  // namespace residx
