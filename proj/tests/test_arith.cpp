#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <numeric>

#include "residx/arith.hpp"
#include "residx/error.hpp"

using namespace residx;

namespace {

bool trial_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

u64 phi_by_gcd_count(u64 n) {
  u64 c = 0;
  for (u64 k = 1; k <= n; ++k)
    if (std::gcd(k, n) == 1) ++c;
  return c;
}

int mu_by_definition(u64 n) {
  int sign = 1;
  for (u64 p = 2; p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  return sign;
}

double ramanujan_by_exponentials(u64 d, u64 n) {
  double s = 0;
  for (u64 k = 1; k <= d; ++k)
    if (std::gcd(k, d) == 1)
      s += std::cos(2 * std::numbers::pi * static_cast<double>(k * n % d) /
                    static_cast<double>(d));
  return s;
}

int euler_criterion(i64 d, u64 p) {
  const i64 r = ((d % static_cast<i64>(p)) + static_cast<i64>(p)) % static_cast<i64>(p);
  if (r == 0) return 0;
  return pow_mod(static_cast<u64>(r), (p - 1) / 2, p) == 1 ? 1 : -1;
}

u64 order_by_enumeration(u64 a, u64 p) {
  u64 v = a % p, k = 1;
  while (v != 1) {
    v = v * (a % p) % p;
    ++k;
  }
  return k;
}

// li(x) - li(2) from the Ramanujan-Soldner series li(x) = gamma + ln ln x +
// sum (ln x)^k / (k k!).
double li_series(double x) {
  const double lx = std::log(x);
  double term = 1, sum = 0;
  for (int k = 1; k < 400; ++k) {
    term *= lx / k;
    sum += term / k;
    if (term / k < 1e-18 * sum) break;
  }
  constexpr double li2 = 1.0451637801174928;
  return std::numbers::egamma + std::log(lx) + sum - li2;
}

u64 product(const Factorization& f) {
  u64 v = 1;
  for (const auto& pp : f.factors)
    for (unsigned i = 0; i < pp.exponent; ++i) v *= pp.prime;
  return v;
}

}  // namespace

TEST(PrimeTable, SmallLimitListsPrimes) {
  const PrimeTable t(10);
  const std::vector<std::uint32_t> got(t.primes().begin(), t.primes().end());
  EXPECT_EQ(got, (std::vector<std::uint32_t>{2, 3, 5, 7}));
}

TEST(PrimeTable, MillionMatchesIndependentRecount) {
  const PrimeTable t(1'000'000);
  EXPECT_EQ(t.primes().size(), 78498u);
  EXPECT_EQ(segmented_primes(1'000'000).size(), t.primes().size());
}

TEST(PrimeTable, AgreesWithTrialDivision) {
  const PrimeTable t(20'000);
  for (u64 n = 0; n <= 20'000; ++n) ASSERT_EQ(t.is_prime(n), trial_prime(n)) << n;
  for (u64 n = 2; n <= 20'000; ++n) {
    const u64 s = t.spf(n);
    ASSERT_EQ(n % s, 0u);
    ASSERT_TRUE(trial_prime(s));
    ASSERT_EQ(s == n, trial_prime(n));
  }
}

TEST(PrimeTable, RejectsLimitsOutOfRange) {
  try {
    PrimeTable t(1);
    FAIL() << "expected a bound error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::bound);
  }
  EXPECT_THROW(PrimeTable(PrimeTable::kMaxLimit + 1), Error);
}

TEST(PrimeTable, TrialDivisionPathMatchesSpfPath) {
  const PrimeTable with_spf(50'000, 100'000);
  const PrimeTable without_spf(50'000, 1000);
  EXPECT_TRUE(with_spf.has_spf());
  EXPECT_FALSE(without_spf.has_spf());
  for (u64 n = 1; n <= 50'000; n += 7) {
    const auto a = with_spf.factorize(n);
    const auto b = without_spf.factorize(n);
    ASSERT_EQ(a.factors, b.factors) << n;
  }
  // beyond the limit but below its square
  const auto f = without_spf.factorize(2'147'483'647ull * 1);
  EXPECT_EQ(f.factors.size(), 1u);
  EXPECT_THROW(without_spf.factorize(50'000ull * 50'001ull), Error);
}

TEST(Factorize, Examples) {
  const PrimeTable t(1000);
  EXPECT_EQ(factorize(12, t).factors, (std::vector<PrimePower>{{2, 2}, {3, 1}}));
  EXPECT_TRUE(factorize(1, t).factors.empty());
  EXPECT_EQ(factorize(97, t).factors, (std::vector<PrimePower>{{97, 1}}));
}

TEST(Factorize, AnyReconstructsValue) {
  const u64 samples[] = {1,
                         2,
                         600851475143ull,
                         1'000'000'007ull * 998'244'353ull,
                         18446744073709551557ull,  // largest 64-bit prime
                         (1ull << 62),
                         4'294'967'291ull * 4'294'967'279ull};
  for (const u64 n : samples) {
    const auto f = factorize_any(n);
    EXPECT_EQ(product(f), n);
    for (const auto& pp : f.factors) EXPECT_TRUE(is_prime_u64(pp.prime)) << n;
  }
}

TEST(Multiplicative, PhiAndMuMatchDefinitions) {
  for (u64 n = 1; n <= 10'000; ++n) {
    ASSERT_EQ(euler_phi(n), phi_by_gcd_count(n)) << n;
    ASSERT_EQ(moebius(n), mu_by_definition(n)) << n;
  }
  EXPECT_EQ(euler_phi(1), 1u);
  EXPECT_EQ(euler_phi(12), 4u);
  EXPECT_EQ(euler_phi(97), 96u);
  EXPECT_EQ(moebius(1), 1);
  EXPECT_EQ(moebius(6), 1);
  EXPECT_EQ(moebius(12), 0);
}

TEST(Multiplicative, Valuations) {
  EXPECT_EQ(v2(1), 0u);
  EXPECT_EQ(v2(48), 4u);
  EXPECT_THROW(v2(0), Error);
  EXPECT_EQ(divisors(12), (std::vector<u64>{1, 2, 3, 4, 6, 12}));
  EXPECT_EQ(lcm(4, 6), 12u);
}

TEST(Ramanujan, Examples) {
  EXPECT_EQ(ramanujan_sum(4, 2), -2);
  EXPECT_EQ(ramanujan_sum(6, 4), -1);
  EXPECT_EQ(ramanujan_sum(5, 0), 4);
}

TEST(Ramanujan, MatchesExponentialSum) {
  for (u64 d = 1; d <= 200; ++d)
    for (u64 n = 0; n <= 200; ++n)
      ASSERT_NEAR(static_cast<double>(ramanujan_sum(d, n)),
                  ramanujan_by_exponentials(d, n), 1e-6)
          << d << " " << n;
}

TEST(Ramanujan, DivisorSumIdentity) {
  for (u64 r = 1; r <= 200; ++r)
    for (u64 e = 0; e <= 200; ++e) {
      i64 s = 0;
      for (const u64 d : divisors(r)) s += ramanujan_sum(d, e);
      ASSERT_EQ(s, e % r == 0 ? static_cast<i64>(r) : 0);
    }
}

TEST(Kronecker, Examples) {
  EXPECT_EQ(kronecker_symbol(8, 7), 1);
  EXPECT_EQ(kronecker_symbol(8, 5), -1);
  EXPECT_EQ(kronecker_symbol(5, 5), 0);
}

TEST(Kronecker, MatchesEulerCriterion) {
  const PrimeTable t(10'000);
  for (const u64 p : t.primes()) {
    if (p == 2) continue;
    for (i64 d = -100; d <= 100; ++d)
      ASSERT_EQ(kronecker_symbol(d, p), euler_criterion(d, p)) << d << " " << p;
  }
}

TEST(Kronecker, RejectsNonOddPrimes) {
  EXPECT_THROW(kronecker_symbol(3, 2), Error);
  EXPECT_THROW(kronecker_symbol(3, 9), Error);
}

TEST(Order, Examples) {
  const PrimeTable t(100);
  EXPECT_EQ(multiplicative_order(2, 7, t.factorize(6)), 3u);
  EXPECT_EQ(multiplicative_order(5, 7, t.factorize(6)), 6u);
  EXPECT_EQ(multiplicative_order(1, 97, t.factorize(96)), 1u);
  EXPECT_THROW(multiplicative_order(14, 7, t.factorize(6)), Error);
}

TEST(Order, MatchesEnumeration) {
  const PrimeTable t(2000);
  for (const u64 p : t.primes()) {
    if (p == 2) continue;
    const auto f = t.factorize(p - 1);
    for (u64 a = 1; a < p; a += 1 + p / 50) {
      const u64 ord = multiplicative_order(a, p, f);
      ASSERT_EQ(ord, order_by_enumeration(a, p)) << a << " mod " << p;
      ASSERT_EQ((p - 1) % ord, 0u);
    }
  }
}

TEST(ModArith, MillerRabinMatchesTrialDivision) {
  for (u64 n = 0; n < 100'000; ++n) ASSERT_EQ(is_prime_u64(n), trial_prime(n)) << n;
  EXPECT_FALSE(is_prime_u64(3215031751ull));  // strong pseudoprime to 2,3,5,7
  EXPECT_EQ(pow_mod(3, 0, 7), 1u);
  EXPECT_EQ(mul_mod(~0ull, ~0ull, 1'000'000'007ull),
            static_cast<u64>((static_cast<unsigned __int128>(~0ull) * ~0ull) %
                             1'000'000'007ull));
}

TEST(LogIntegral, Examples) {
  EXPECT_EQ(log_integral(2), 0.0);
  EXPECT_NEAR(log_integral(100), 29.081, 5e-4);
  EXPECT_THROW(log_integral(1.5), Error);
}

TEST(LogIntegral, MatchesSeries) {
  for (double x : {2.5, 3.0, 10.0, 100.0, 1e3, 1e4, 1e5, 1e6, 1e7, 1e9}) {
    const double expect = li_series(x);
    EXPECT_NEAR(log_integral(x) / expect, 1.0, 1e-9) << x;
  }
  // integral from 2, not from 0
  EXPECT_NEAR(log_integral(1e6), 78626.50, 0.01);
}
