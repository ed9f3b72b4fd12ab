#pragma once

// Elementary kernels: sieving, factorization, multiplicative functions,
// Ramanujan sums, quadratic symbols, modular arithmetic and Li(x).

#include <cstdint>
#include <span>
#include <vector>

namespace residx {

using u64 = std::uint64_t;
using i64 = std::int64_t;

struct PrimePower {
  u64 prime;
  unsigned exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// n = prod prime^exponent, primes strictly increasing. n = 1 has no factors.
struct Factorization {
  u64 value = 1;
  std::vector<PrimePower> factors;
};

/// Primes up to `limit` from a segmented sieve, plus a smallest-prime-factor
/// table when the limit is below the spf memory cap. Immutable once built and
/// safe to share between threads.
class PrimeTable {
 public:
  static constexpr u64 kMaxLimit = 1'000'000'000;
  static constexpr u64 kDefaultSpfCap = 100'000'000;

  /// Reads RESIDX_SPF_CAP from the environment, falling back to
  /// kDefaultSpfCap.
  static u64 spf_cap_from_env();

  explicit PrimeTable(u64 limit) : PrimeTable(limit, spf_cap_from_env()) {}
  PrimeTable(u64 limit, u64 spf_cap);

  u64 limit() const { return limit_; }
  std::span<const std::uint32_t> primes() const { return primes_; }
  /// Primes <= x (x is clamped to the limit).
  std::span<const std::uint32_t> primes_upto(u64 x) const;
  bool has_spf() const { return !spf_.empty(); }
  /// Smallest prime factor of 2 <= n <= limit.
  u64 spf(u64 n) const;
  bool is_prime(u64 n) const;

  /// Factors 1 <= n <= limit^2: table lookups when n <= limit and the spf
  /// array exists, trial division over the stored primes otherwise.
  Factorization factorize(u64 n) const;

 private:
  u64 limit_;
  std::vector<std::uint32_t> primes_;
  std::vector<std::uint32_t> spf_;
};

PrimeTable build_prime_table(u64 limit);

/// Primes <= limit by an independent plain sieve; used for cross-checks.
std::vector<std::uint32_t> segmented_primes(u64 limit);

Factorization factorize(u64 n, const PrimeTable& table);
/// Full factorization of any 64-bit integer (trial division + Pollard rho).
Factorization factorize_any(u64 n);

u64 euler_phi(const Factorization& f);
int moebius(const Factorization& f);
u64 euler_phi(u64 n);
int moebius(u64 n);

/// Exponent of 2 in n > 0.
unsigned v2(u64 n);
u64 gcd(u64 a, u64 b);
u64 lcm(u64 a, u64 b);

/// Divisors of f.value in increasing order.
std::vector<u64> divisors(const Factorization& f);
std::vector<u64> divisors(u64 n);

/// c_d(n) via Hoelder's closed form mu(d/(d,n)) phi(d) / phi(d/(d,n)).
i64 ramanujan_sum(u64 d, u64 n);

u64 mul_mod(u64 a, u64 b, u64 m);
u64 pow_mod(u64 base, u64 exp, u64 m);
/// Deterministic Miller-Rabin for all 64-bit inputs.
bool is_prime_u64(u64 n);

/// Legendre symbol (d/p) for an odd prime p.
int kronecker_symbol(i64 d, u64 p);
/// Jacobi symbol (d/n) for odd n >= 1; no primality check.
int jacobi_symbol(i64 d, u64 n);

/// Multiplicative order of a modulo the odd prime p, given p-1 factored.
u64 multiplicative_order(u64 a, u64 p, const Factorization& fac_pm1);

/// Li(x) = integral from 2 to x of dt/log t, x >= 2.
double log_integral(double x);

}  // namespace residx
