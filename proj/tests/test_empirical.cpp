#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <numeric>

#include "residx/empirical.hpp"
#include "residx/error.hpp"
#include "residx/verify.hpp"

using namespace residx;

namespace {

// Everything below recomputes from scratch with naive loops.

u64 brute_residue(const Rational& g, u64 p) {
  const u64 num = static_cast<u64>(((g.num % static_cast<i64>(p)) + static_cast<i64>(p)) %
                                   static_cast<i64>(p));
  const u64 den = static_cast<u64>(g.den) % p;
  for (u64 y = 1; y < p; ++y)
    if (den * y % p == 1) return num * y % p;
  return 0;
}

u64 brute_index(const Rational& g, u64 p) {
  const u64 a = brute_residue(g, p);
  u64 v = a, k = 1;
  while (v != 1) {
    v = v * a % p;
    ++k;
  }
  return (p - 1) / k;
}

bool brute_counted(const Rational& g, u64 p) {
  return p != 2 && g.num % static_cast<i64>(p) != 0 && g.den % static_cast<i64>(p) != 0;
}

bool brute_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

int brute_square_class(const Rational& g0, u64 p) {
  const u64 a = brute_residue(g0, p);
  for (u64 y = 1; y < p; ++y)
    if (y * y % p == a) return 1;
  return -1;
}

i64 exp_ramanujan(u64 d, u64 n) {
  double s = 0;
  for (u64 k = 1; k <= d; ++k)
    if (std::gcd(k, d) == 1)
      s += std::cos(2 * std::numbers::pi * static_cast<double>(k * n % d) /
                    static_cast<double>(d));
  return std::lround(s);
}

struct Brute {
  u64 N = 0, R = 0, pi = 0, split = 0;
  i64 L = 0, Q = 0;  // times t
};

// Entry t - 1 holds the counts for t.
std::vector<Brute> brute_counts(const GDecomposition& dec, u64 max_t, u64 x) {
  std::vector<Brute> out(max_t);
  for (u64 p = 3; p <= x; ++p) {
    if (!brute_prime(p) || !brute_counted(dec.g, p)) continue;
    const u64 r = brute_index(dec.g, p);
    const bool split = brute_square_class(dec.g0, p) == 1;
    for (u64 t = 1; t <= max_t; ++t) {
      if ((p - 1) % t != 0) continue;
      Brute& b = out[t - 1];
      ++b.pi;
      if (split) ++b.split;
      if (r == t) ++b.N;
      if (r % t == 0) ++b.R;
      for (u64 d = 1; d <= t; ++d) {
        if (t % d != 0) continue;
        if (dec.h % d == 0)
          b.L += exp_ramanujan(d, r);
        else if ((2 * dec.h) % d == 0)
          b.Q += exp_ramanujan(d, r);
      }
    }
  }
  return out;
}

}  // namespace

TEST(ResidualIndex, Examples) {
  const PrimeTable t(100);
  auto r = residual_index({2, 1}, 7, t);
  EXPECT_EQ(r.status, PrimeStatus::counted);
  EXPECT_EQ(r.index, 2u);
  EXPECT_EQ(residual_index({2, 1}, 5, t).index, 1u);
  EXPECT_EQ(residual_index({9, 25}, 5, t).status, PrimeStatus::excluded);
  EXPECT_EQ(residual_index({9, 25}, 3, t).status, PrimeStatus::excluded);
  EXPECT_EQ(residual_index({3, 1}, 2, t).status, PrimeStatus::excluded);
}

TEST(ResidualIndex, IndexTimesOrderIsPMinusOne) {
  const PrimeTable t(5000);
  for (const Rational& g : default_test_bases())
    for (const u64 p : t.primes()) {
      const auto r = residual_index(g, p, t);
      if (r.status != PrimeStatus::counted) continue;
      ASSERT_EQ(r.index, brute_index(g, p)) << g.str() << " " << p;
    }
}

TEST(Counts, Examples) {
  const PrimeTable t(1000);
  const auto g2 = decompose_g({2, 1});
  EXPECT_EQ(count_exact_index(g2, 2, 20, t), 2u);
  EXPECT_EQ(count_exact_index(g2, 1, 20, t), 5u);
  EXPECT_EQ(count_divisible_index(g2, 1, 20, t), 7u);
  EXPECT_EQ(count_divisible_index(g2, 2, 20, t), 2u);
  for (const Rational& g : default_test_bases())
    EXPECT_EQ(count_exact_index(decompose_g(g), 7, 7, t), 0u);

  const auto g4 = decompose_g({4, 1});
  u64 expect = 0;
  for (u64 p = 3; p <= 100; ++p)
    if (brute_prime(p) && brute_index({4, 1}, p) % 2 == 0) ++expect;
  EXPECT_EQ(count_divisible_index(g4, 2, 100, t), expect);
}

TEST(Counts, ProgressionAndSplitExamples) {
  const PrimeTable t(1000);
  EXPECT_EQ(count_progression(20, 4, t), 3u);
  EXPECT_EQ(count_progression(20, 1, t, decompose_g({2, 1})), 7u);
  EXPECT_EQ(count_progression(3, 5, t), 0u);
  EXPECT_EQ(count_split_quadratic(20, 1, 8, t), 2u);
  EXPECT_EQ(count_split_quadratic(20, 4, 8, t), 1u);
  EXPECT_EQ(count_split_quadratic(5, 8, 5, t), 0u);
  EXPECT_EQ(count_split_quadratic(5, 8, 8, t), 0u);
}

TEST(Counts, CharSumExamples) {
  const PrimeTable t(1000);
  const auto g2 = decompose_g({2, 1});
  const CharSums s = char_sums_LQ(g2, 2, 20, t);
  EXPECT_EQ(s.Q(), Fraction(-3, 2));
  for (u64 tt = 1; tt <= 12; ++tt)
    EXPECT_EQ(char_sums_LQ(g2, tt, 500, t).L(),
              Fraction(static_cast<i64>(count_progression(500, tt, t, g2)),
                       static_cast<i64>(tt)));
  const auto g8 = decompose_g({8, 1});
  const Brute b = brute_counts(g8, 3, 20)[2];
  EXPECT_EQ(char_sums_LQ(g8, 3, 20, t).L(), Fraction(b.L, 3));
}

TEST(Counts, MatchBruteForceOnTestBases) {
  const u64 x = 3000;
  const PrimeTable t(x);
  for (const Rational& g : default_test_bases()) {
    const auto dec = decompose_g(g);
    const auto brute = brute_counts(dec, 24, x);
    for (u64 tt = 1; tt <= 24; ++tt) {
      const Brute& b = brute[tt - 1];
      SCOPED_TRACE(g.str() + " t=" + std::to_string(tt));
      EXPECT_EQ(count_exact_index(dec, tt, x, t), b.N);
      EXPECT_EQ(count_divisible_index(dec, tt, x, t), b.R);
      EXPECT_EQ(count_progression(x, tt, t, dec), b.pi);
      EXPECT_EQ(count_split_quadratic(x, tt, t, dec), b.split);
      const CharSums cs = char_sums_LQ(dec, tt, x, t);
      EXPECT_EQ(cs.linear, b.L);
      EXPECT_EQ(cs.quadratic, b.Q);
    }
  }
}

TEST(Counts, BatchedTablesMatchStreamedCounts) {
  const u64 x = 20'000;
  const PrimeTable t(x);
  for (const Rational& g : default_test_bases()) {
    const auto dec = decompose_g(g);
    const IndexCounts ic = index_counts(dec, x, t);
    const ProgressionCounts pc = progression_counts(dec, x, 64, t);
    for (u64 m = 1; m <= 32; ++m) {
      ASSERT_EQ(ic.exact[m], count_exact_index(dec, m, x, t));
      ASSERT_EQ(ic.divisible[m], count_divisible_index(dec, m, x, t));
      ASSERT_EQ(pc.pi_at(m), count_progression(x, m, t, dec));
      ASSERT_EQ(pc.split_at(m), count_split_quadratic(x, m, t, dec));
    }
    EXPECT_EQ(pc.pi_at(x), 0u);
    EXPECT_THROW(pc.pi_at(65), Error);
  }
}

TEST(Counts, PartitionAndInclusionExclusion) {
  const u64 x = 20'000;
  const PrimeTable t(x);
  for (const Rational& g : default_test_bases()) {
    const auto dec = decompose_g(g);
    const IndexCounts ic = index_counts(dec, x, t);
    u64 total = 0;
    for (u64 m = 1; m <= x; ++m) total += ic.exact[m];
    EXPECT_EQ(total, ic.counted);
    EXPECT_EQ(ic.counted, count_progression(x, 1, t, dec));
    for (u64 tt = 1; tt <= 24; ++tt) {
      i64 n = 0;
      for (u64 k = 1; k * tt <= x - 1; ++k)
        n += moebius(k) * static_cast<i64>(ic.divisible[k * tt]);
      ASSERT_EQ(n, static_cast<i64>(ic.exact[tt]));
    }
  }
}

TEST(Counts, RemainderClosesDecomposition) {
  const u64 x = 20'000;
  const PrimeTable t(x);
  for (const Rational& g : default_test_bases()) {
    const auto dec = decompose_g(g);
    for (u64 tt = 1; tt <= 24; ++tt) {
      const CharSums cs = char_sums_LQ(dec, tt, x, t);
      ASSERT_EQ(cs.linear + cs.quadratic + cs.remainder,
                static_cast<i64>(tt * count_divisible_index(dec, tt, x, t)));
    }
  }
}

TEST(Counts, SplittingCriterion) {
  for (const Rational& g : default_test_bases())
    for (u64 p = 3; p < 3000; ++p) {
      if (!brute_prime(p) || !brute_counted(g, p)) continue;
      const u64 r = brute_index(g, p);
      for (u64 tt = 1; tt <= 24; ++tt) ASSERT_EQ(r % tt == 0, splits_completely(g, tt, p));
    }
}

TEST(Counts, ThreadCountDoesNotChangeResults) {
  const u64 x = 300'000;
  const PrimeTable t(x);
  const auto dec = decompose_g({-3, 1});
  const u64 n1 = count_exact_index(dec, 2, x, t, 1);
  const CharSums c1 = char_sums_LQ(dec, 6, x, t, 1);
  for (unsigned threads : {2u, 4u, 8u}) {
    EXPECT_EQ(count_exact_index(dec, 2, x, t, threads), n1);
    const CharSums c = char_sums_LQ(dec, 6, x, t, threads);
    EXPECT_EQ(c.linear, c1.linear);
    EXPECT_EQ(c.quadratic, c1.quadratic);
  }
}

TEST(Counts, RefusesBeyondTable) {
  const PrimeTable t(1000);
  try {
    count_exact_index(decompose_g({2, 1}), 1, 1001, t);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::capability);
  }
}
