#include "residx/empirical.hpp"

#include <cstdlib>

namespace residx {

namespace {

u64 abs_mod(i64 v, u64 p) {
  return static_cast<u64>(std::llabs(v)) % p;
}

}  // namespace

bool is_counted(const Rational& g, u64 p) {
  if (p % 2 == 0) return false;
  return abs_mod(g.num, p) != 0 && abs_mod(g.den, p) != 0;
}

u64 base_residue(const Rational& g, u64 p) {
  u64 a = abs_mod(g.num, p);
  if (g.num < 0 && a != 0) a = p - a;
  const u64 b = abs_mod(g.den, p);
  if (a == 0 || b == 0)
    fail(ErrorKind::domain, "p = " + std::to_string(p) + " divides " + g.str());
  return mul_mod(a, pow_mod(b, p - 2, p), p);
}

ResidualIndexOutcome residual_index(const Rational& g, u64 p,
                                    const PrimeTable& table) {
  ResidualIndexOutcome out;
  out.p = p;
  if (p > table.limit())
    fail(ErrorKind::capability, "p exceeds the sieve limit");
  if (!is_counted(g, p)) return out;
  const Factorization pm1 = table.factorize(p - 1);
  out.status = PrimeStatus::counted;
  out.index = (p - 1) / multiplicative_order(base_residue(g, p), p, pm1);
  return out;
}

std::optional<PrimeContext> make_prime_context(const GDecomposition& dec,
                                               u64 p, const PrimeTable& table) {
  if (!is_counted(dec.g, p)) return std::nullopt;
  PrimeContext ctx;
  ctx.p = p;
  ctx.pm1 = table.factorize(p - 1);
  ctx.index = (p - 1) / multiplicative_order(base_residue(dec.g, p), p, ctx.pm1);
  ctx.legendre = jacobi_symbol(dec.disc, p);
  return ctx;
}

bool splits_completely(const Rational& g, u64 t, u64 p) {
  if ((p - 1) % t != 0) return false;
  return pow_mod(base_residue(g, p), (p - 1) / t, p) == 1;
}

namespace {

struct Count {
  u64 n = 0;
  Count& operator+=(const Count& o) {
    n += o.n;
    return *this;
  }
};

}  // namespace

u64 count_exact_index(const GDecomposition& dec, u64 t, u64 x,
                      const PrimeTable& table, unsigned threads) {
  if (t == 0) fail(ErrorKind::domain, "t must be >= 1");
  return reduce_counted_primes<Count>(dec, x, table, threads,
                                      [t](Count& acc, const PrimeContext& c) {
                                        if (c.index == t) ++acc.n;
                                      })
      .n;
}

u64 count_divisible_index(const GDecomposition& dec, u64 t, u64 x,
                          const PrimeTable& table, unsigned threads) {
  if (t == 0) fail(ErrorKind::domain, "t must be >= 1");
  const Rational g = dec.g;
  return reduce_counted_primes<Count>(
             dec, x, table, threads,
             [t, g](Count& acc, const PrimeContext& c) {
               const bool by_index = c.index % t == 0;
               if (by_index != splits_completely(g, t, c.p))
                 fail(ErrorKind::invariant,
                      "splitting criterion disagrees with the residual index "
                      "at p = " + std::to_string(c.p));
               if (by_index) ++acc.n;
             })
      .n;
}

u64 count_progression(u64 x, u64 t, const PrimeTable& table) {
  if (t == 0) fail(ErrorKind::domain, "t must be >= 1");
  u64 n = 0;
  for (const u64 p : table.primes_upto(x))
    if (p != 2 && (p - 1) % t == 0) ++n;
  return n;
}

u64 count_progression(u64 x, u64 t, const PrimeTable& table,
                      const GDecomposition& dec) {
  if (t == 0) fail(ErrorKind::domain, "t must be >= 1");
  u64 n = 0;
  for (const u64 p : table.primes_upto(x))
    if ((p - 1) % t == 0 && is_counted(dec.g, p)) ++n;
  return n;
}

u64 count_split_quadratic(u64 x, u64 t, i64 disc, const PrimeTable& table) {
  if (t == 0) fail(ErrorKind::domain, "t must be >= 1");
  u64 n = 0;
  for (const u64 p : table.primes_upto(x))
    if (p != 2 && (p - 1) % t == 0 && jacobi_symbol(disc, p) == 1) ++n;
  return n;
}

u64 count_split_quadratic(u64 x, u64 t, const PrimeTable& table,
                          const GDecomposition& dec) {
  if (t == 0) fail(ErrorKind::domain, "t must be >= 1");
  u64 n = 0;
  for (const u64 p : table.primes_upto(x))
    if ((p - 1) % t == 0 && is_counted(dec.g, p) &&
        jacobi_symbol(dec.disc, p) == 1)
      ++n;
  return n;
}

namespace {

enum class CharClass { linear, quadratic, remainder };

struct DivisorTerm {
  u64 d;
  CharClass cls;
};

struct CharAcc {
  i64 linear = 0;
  i64 quadratic = 0;
  i64 remainder = 0;
  CharAcc& operator+=(const CharAcc& o) {
    linear += o.linear;
    quadratic += o.quadratic;
    remainder += o.remainder;
    return *this;
  }
};

}  // namespace

CharSums char_sums_LQ(const GDecomposition& dec, u64 t, u64 x,
                      const PrimeTable& table, unsigned threads) {
  if (t == 0) fail(ErrorKind::domain, "t must be >= 1");
  std::vector<DivisorTerm> terms;
  for (const u64 d : divisors(t)) {
    CharClass cls = CharClass::remainder;
    if (dec.h % d == 0)
      cls = CharClass::linear;
    else if ((2 * dec.h) % d == 0)
      cls = CharClass::quadratic;
    terms.push_back({d, cls});
  }
  const CharAcc acc = reduce_counted_primes<CharAcc>(
      dec, x, table, threads, [&terms, t](CharAcc& a, const PrimeContext& c) {
        if ((c.p - 1) % t != 0) return;
        for (const auto& [d, cls] : terms) {
          const i64 v = ramanujan_sum(d, c.index);
          switch (cls) {
            case CharClass::linear: a.linear += v; break;
            case CharClass::quadratic: a.quadratic += v; break;
            case CharClass::remainder: a.remainder += v; break;
          }
        }
      });
  return {t, acc.linear, acc.quadratic, acc.remainder};
}

namespace {

struct IndexList {
  std::vector<u64> indices;
  IndexList& operator+=(const IndexList& o) {
    indices.insert(indices.end(), o.indices.begin(), o.indices.end());
    return *this;
  }
};

}  // namespace

IndexCounts index_counts(const GDecomposition& dec, u64 x,
                         const PrimeTable& table, unsigned threads) {
  const IndexList list = reduce_counted_primes<IndexList>(
      dec, x, table, threads,
      [](IndexList& acc, const PrimeContext& c) { acc.indices.push_back(c.index); });
  IndexCounts out;
  out.x = x;
  out.counted = list.indices.size();
  out.exact.assign(x + 1, 0);
  out.divisible.assign(x + 1, 0);
  for (const u64 r : list.indices) {
    ++out.exact[r];
    for (const u64 d : divisors(table.factorize(r))) ++out.divisible[d];
  }
  return out;
}

u64 ProgressionCounts::pi_at(u64 m) const {
  if (m == 0) fail(ErrorKind::domain, "modulus must be >= 1");
  if (m < pi.size()) return pi[m];
  if (m >= x) return 0;
  fail(ErrorKind::capability, "modulus beyond the progression table");
}

u64 ProgressionCounts::split_at(u64 m) const {
  if (m == 0) fail(ErrorKind::domain, "modulus must be >= 1");
  if (m < split.size()) return split[m];
  if (m >= x) return 0;
  fail(ErrorKind::capability, "modulus beyond the progression table");
}

ProgressionCounts progression_counts(const GDecomposition& dec, u64 x,
                                     u64 max_modulus, const PrimeTable& table) {
  if (x > table.limit())
    fail(ErrorKind::capability, "x exceeds the sieve limit");
  ProgressionCounts out;
  out.x = x;
  out.pi.assign(max_modulus + 1, 0);
  out.split.assign(max_modulus + 1, 0);
  for (const u64 p : table.primes_upto(x)) {
    if (!is_counted(dec.g, p)) continue;
    const bool split = jacobi_symbol(dec.disc, p) == 1;
    for (const u64 m : divisors(table.factorize(p - 1))) {
      if (m > max_modulus) break;
      ++out.pi[m];
      if (split) ++out.split[m];
    }
  }
  return out;
}

}  // namespace residx
