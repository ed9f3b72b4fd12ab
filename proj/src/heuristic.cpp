#include "residx/heuristic.hpp"

namespace residx {

namespace {

// (-1)^(n / 2^k) for 2^k | n.
int sign_of_quotient(u64 n, unsigned k) { return ((n >> k) & 1) == 0 ? 1 : -1; }

WeightContext context_from(const GDecomposition& dec,
                           const HeuristicParams& params, u64 p, int legendre) {
  WeightContext ctx;
  ctx.params = params;
  ctx.dec = dec;
  ctx.p = p;
  ctx.legendre = legendre;
  ctx.v2p = v2(p - 1);
  return ctx;
}

mpq_class to_mpq(const Fraction& f) {
  mpq_class q{mpz_class(static_cast<long>(f.num())),
              mpz_class(static_cast<long>(f.den()))};
  q.canonicalize();
  return q;
}

}  // namespace

WeightContext make_weight_context(const GDecomposition& dec,
                                  const HeuristicParams& params, u64 p) {
  if (!is_counted(dec.g, p))
    fail(ErrorKind::domain,
         "p = " + std::to_string(p) + " is not counted for g = " + dec.g.str());
  return context_from(dec, params, p, kronecker_symbol(dec.disc, p));
}

int weight_w(const WeightContext& ctx) {
  const HeuristicParams& q = ctx.params;
  const unsigned e = ctx.dec.e;
  const u64 pm1 = ctx.p - 1;
  int w = 0;
  if (ctx.dec.sign > 0) {
    if (pm1 % q.t != 0 || gcd(pm1 / q.t, q.h_t) != 1) return 0;
    if (q.eps1 == 0) return 1;
    // eps1 != 0 means tau >= e, so 2^e | p-1 and the factor 1 + (-1)^... is
    // 0 or 2.
    const int half = (1 + sign_of_quotient(pm1, e)) / 2;
    w = 1 + q.eps1 * half * ctx.legendre;
  } else if (q.h_t % 2 == 1) {
    const u64 modulus = lcm(u64{1} << (e + 1), q.t);
    if (pm1 % modulus != 0 || gcd(pm1 / q.t, q.h_t) != 1) return 0;
    if (q.eps1 == 0) return 1;
    w = 1 + q.eps1 * sign_of_quotient(pm1, e + 1) * ctx.legendre;
  } else {
    if (pm1 % (2 * q.t) != 0 || gcd(pm1 / (2 * q.t), q.h_t) != 1) return 0;
    w = 2;
  }
  if (w < 0 || w > 2) fail(ErrorKind::invariant, "w outside {0,1,2}");
  return w;
}

int weight_r(const WeightContext& ctx) {
  const HeuristicParams& q = ctx.params;
  const u64 pm1 = ctx.p - 1;
  int r = 0;
  if (ctx.dec.sign > 0) {
    if (pm1 % q.t != 0) return 0;
    r = 1 + q.eps2 * ctx.legendre;
  } else {
    const u64 modulus = q.eps2 == 1 ? q.t : 2 * q.t;
    if (pm1 % modulus != 0) return 0;
    // The sign factor enters only when tau > e (coefficient eps2, not |eps1|:
    // at tau = e enumeration gives r = 1 on p = 1 mod 2t).
    if (q.eps2 == 0) return 1;
    r = 1 + sign_of_quotient(pm1, ctx.dec.e + 1) * ctx.legendre;
  }
  if (r < 0 || r > 2) fail(ErrorKind::invariant, "r outside {0,1,2}");
  return r;
}

Factorization divide_factorization(const Factorization& f, u64 t) {
  if (t == 0 || f.value % t != 0)
    fail(ErrorKind::domain, std::to_string(t) + " does not divide " +
                                std::to_string(f.value));
  Factorization out;
  out.value = f.value / t;
  for (const auto& [p, e] : f.factors) {
    unsigned k = e;
    while (t % p == 0) {
      t /= p;
      --k;
    }
    if (k > 0) out.factors.push_back({p, k});
  }
  return out;
}

namespace {

struct RealSum {
  double s = 0.0;
  RealSum& operator+=(const RealSum& o) {
    s += o.s;
    return *this;
  }
};

struct IntSum {
  i64 s = 0;
  IntSum& operator+=(const IntSum& o) {
    s += o.s;
    return *this;
  }
};

}  // namespace

double sum_naive(const GDecomposition& dec, u64 t, u64 x,
                 const PrimeTable& table, unsigned threads) {
  if (t == 0) fail(ErrorKind::domain, "t must be >= 1");
  return reduce_counted_primes<RealSum>(
             dec, x, table, threads,
             [t](RealSum& acc, const PrimeContext& c) {
               if ((c.p - 1) % t != 0) return;
               const u64 phi = euler_phi(divide_factorization(c.pm1, t));
               acc.s += static_cast<double>(phi) / static_cast<double>(c.p - 1);
             })
      .s;
}

double sum_quadratic(const GDecomposition& dec, u64 t, u64 x,
                     const PrimeTable& table, unsigned threads) {
  const HeuristicParams params = derive_params(dec, t);
  const double s =
      reduce_counted_primes<RealSum>(
          dec, x, table, threads,
          [&](RealSum& acc, const PrimeContext& c) {
            if ((c.p - 1) % t != 0) return;
            const int w = weight_w(context_from(dec, params, c.p, c.legendre));
            if (w == 0) return;
            const u64 phi = euler_phi(divide_factorization(c.pm1, t));
            acc.s += w * static_cast<double>(phi) / static_cast<double>(c.p - 1);
          })
          .s;
  return static_cast<double>(params.gcd_ht) * s;
}

mpq_class exact_sum(std::vector<mpq_class> terms) {
  if (terms.empty()) return 0;
  while (terms.size() > 1) {
    std::size_t out = 0;
    for (std::size_t i = 0; i < terms.size(); i += 2) {
      if (i + 1 < terms.size())
        terms[out++] = terms[i] + terms[i + 1];
      else
        terms[out++] = terms[i];
    }
    terms.resize(out);
  }
  return terms.front();
}

mpq_class sum_quadratic_exact(const GDecomposition& dec, u64 t, u64 x,
                              const PrimeTable& table) {
  const HeuristicParams params = derive_params(dec, t);
  std::vector<mpq_class> terms;
  for (const u64 p : table.primes_upto(x)) {
    if ((p - 1) % t != 0 || !is_counted(dec.g, p)) continue;
    const int w =
        weight_w(context_from(dec, params, p, jacobi_symbol(dec.disc, p)));
    if (w == 0) continue;
    const u64 phi = euler_phi(divide_factorization(table.factorize(p - 1), t));
    mpq_class q{mpz_class(static_cast<unsigned long>(w * phi * params.gcd_ht)),
                mpz_class(static_cast<unsigned long>(p - 1))};
    q.canonicalize();
    terms.push_back(std::move(q));
  }
  return exact_sum(std::move(terms));
}

Fraction sum_divisible_H(const GDecomposition& dec, u64 t, u64 x,
                         const PrimeTable& table, unsigned threads) {
  const HeuristicParams params = derive_params(dec, t);
  const i64 total =
      reduce_counted_primes<IntSum>(
          dec, x, table, threads,
          [&](IntSum& acc, const PrimeContext& c) {
            if ((c.p - 1) % t != 0) return;
            acc.s += weight_r(context_from(dec, params, c.p, c.legendre));
          })
          .s;
  return {total, static_cast<i64>(params.t_h)};
}

Fraction closed_form_M(const GDecomposition& dec, u64 t, u64 pi_t, u64 pi_2t,
                       u64 split_t, u64 split_2t) {
  const HeuristicParams q = derive_params(dec, t);
  const i64 th = static_cast<i64>(q.t_h);
  const i64 a = static_cast<i64>(pi_t);
  const i64 b = static_cast<i64>(pi_2t);
  const i64 s1 = static_cast<i64>(split_t);
  const i64 s2 = static_cast<i64>(split_2t);
  if (dec.sign > 0) {
    if (q.tau <= dec.e) return {a, th};
    return {2 * s1, th};
  }
  if (q.tau <= dec.e) return {b, th};
  if (q.tau == dec.e + 1) return {4 * s2 - 2 * s1 + 2 * (a - b), th};
  return {2 * s1, th};
}

Fraction closed_form_M(const GDecomposition& dec, u64 t, u64 x,
                       const PrimeTable& table) {
  if (t == 0) fail(ErrorKind::domain, "t must be >= 1");
  return closed_form_M(dec, t, count_progression(x, t, table, dec),
                       count_progression(x, 2 * t, table, dec),
                       count_split_quadratic(x, t, table, dec),
                       count_split_quadratic(x, 2 * t, table, dec));
}

Fraction closed_form_M(const GDecomposition& dec, u64 t,
                       const ProgressionCounts& counts) {
  if (t == 0) fail(ErrorKind::domain, "t must be >= 1");
  return closed_form_M(dec, t, counts.pi_at(t), counts.pi_at(2 * t),
                       counts.split_at(t), counts.split_at(2 * t));
}

mpq_class moebius_sum_M_exact(const GDecomposition& dec, u64 t,
                              const ProgressionCounts& counts,
                              const PrimeTable& table) {
  std::vector<mpq_class> terms;
  // M_{g,kt}(x) counts primes p <= x with kt | p-1, so it vanishes once
  // kt > x - 1.
  for (u64 k = 1; k * t + 1 <= counts.x; ++k) {
    const int mu = moebius(table.factorize(k));
    if (mu == 0) continue;
    const Fraction m = closed_form_M(dec, k * t, counts);
    if (m.is_zero()) continue;
    terms.push_back(mu > 0 ? to_mpq(m) : mpq_class(-to_mpq(m)));
  }
  return exact_sum(std::move(terms));
}

Fraction weighted_exact_density(const GDecomposition& dec, u64 t, u64 p,
                                const Factorization& pm1) {
  const HeuristicParams q = derive_params(dec, t);
  const int w = weight_w(make_weight_context(dec, q, p));
  if (w == 0) return 0;
  const u64 phi = euler_phi(divide_factorization(pm1, t));
  return Fraction(static_cast<i64>(w * q.gcd_ht * phi), static_cast<i64>(p - 1));
}

Fraction exact_density_from_r(const GDecomposition& dec, u64 t, u64 p,
                              const Factorization& pm1) {
  Fraction total = 0;
  const int legendre = kronecker_symbol(dec.disc, p);
  for (const u64 d : divisors(divide_factorization(pm1, t))) {
    const int mu = moebius(factorize_any(d));
    if (mu == 0) continue;
    const HeuristicParams q = derive_params(dec, d * t);
    const int r = weight_r(context_from(dec, q, p, legendre));
    if (r == 0) continue;
    total += Fraction(mu * r * static_cast<i64>(q.gcd_ht), static_cast<i64>(d * t));
  }
  return total;
}

Fraction r_from_w(const GDecomposition& dec, u64 t, u64 p,
                  const Factorization& pm1) {
  Fraction total = 0;
  const int legendre = kronecker_symbol(dec.disc, p);
  const Factorization quotient = divide_factorization(pm1, t);
  for (const u64 d : divisors(quotient)) {
    const HeuristicParams q = derive_params(dec, d * t);
    const int w = weight_w(context_from(dec, q, p, legendre));
    if (w == 0) continue;
    const u64 phi = euler_phi(divide_factorization(quotient, d));
    total += Fraction(static_cast<i64>(w * q.gcd_ht * phi), static_cast<i64>(p - 1));
  }
  return total * Fraction(static_cast<i64>(derive_params(dec, t).t_h));
}

}  // namespace residx
