#pragma once

// Exact counting over primes: residual indices, N_{g,t}(x), R_{g,t}(x),
// pi(x;t,1), split-prime counts for Q(zeta_t, sqrt(g0)) and the linear and
// quadratic character aggregates L and Q.
//
// Every sum skips p = 2 and the primes dividing the numerator or denominator
// of g.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "residx/arith.hpp"
#include "residx/decompose.hpp"
#include "residx/fraction.hpp"

namespace residx {

enum class PrimeStatus { counted, excluded };

struct ResidualIndexOutcome {
  u64 p = 0;
  PrimeStatus status = PrimeStatus::excluded;
  u64 index = 0;  // r_g(p) when counted
};

/// g mod p as a residue; p must not divide the numerator or denominator.
u64 base_residue(const Rational& g, u64 p);

/// True when p is odd and does not divide num(g) * den(g).
bool is_counted(const Rational& g, u64 p);

ResidualIndexOutcome residual_index(const Rational& g, u64 p,
                                    const PrimeTable& table);

/// Everything the per-prime kernels need about a counted prime.
struct PrimeContext {
  u64 p = 0;
  u64 index = 0;     // r_g(p)
  int legendre = 0;  // (d(g0)/p)
  Factorization pm1; // p - 1
};

std::optional<PrimeContext> make_prime_context(const GDecomposition& dec,
                                               u64 p, const PrimeTable& table);

/// Primes are processed in fixed-size chunks whose partial accumulators are
/// merged in chunk order, so the result (floating sums included) does not
/// depend on the number of threads.
inline constexpr std::size_t kPrimeChunk = 4096;

template <class Acc, class Visit>
Acc reduce_counted_primes(const GDecomposition& dec, u64 x,
                          const PrimeTable& table, unsigned threads,
                          Visit visit) {
  if (x > table.limit())
    fail(ErrorKind::capability, "x = " + std::to_string(x) +
                                    " exceeds the sieve limit " +
                                    std::to_string(table.limit()));
  const auto primes = table.primes_upto(x);
  const std::size_t chunks = (primes.size() + kPrimeChunk - 1) / kPrimeChunk;
  std::vector<Acc> partial(chunks);
  auto run_chunk = [&](std::size_t c) {
    const std::size_t lo = c * kPrimeChunk;
    const std::size_t hi = std::min(primes.size(), lo + kPrimeChunk);
    Acc& acc = partial[c];
    for (std::size_t i = lo; i < hi; ++i) {
      if (auto ctx = make_prime_context(dec, primes[i], table)) visit(acc, *ctx);
    }
  };
  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(std::max(threads, 1u), chunks));
  if (workers <= 1) {
    for (std::size_t c = 0; c < chunks; ++c) run_chunk(c);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t c; (c = next.fetch_add(1)) < chunks;) run_chunk(c);
        } catch (...) {
          errors[w] = std::current_exception();
          next.store(chunks);
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& err : errors)
      if (err) std::rethrow_exception(err);
  }
  Acc total{};
  for (const Acc& a : partial) total += a;
  return total;
}

/// N_{g,t}(x): counted p <= x with r_g(p) = t.
u64 count_exact_index(const GDecomposition& dec, u64 t, u64 x,
                      const PrimeTable& table, unsigned threads = 1);

/// R_{g,t}(x): counted p <= x with t | r_g(p). Each prime is also checked
/// against p = 1 (mod t) and g^((p-1)/t) = 1 (mod p); a disagreement throws
/// an invariant error.
u64 count_divisible_index(const GDecomposition& dec, u64 t, u64 x,
                          const PrimeTable& table, unsigned threads = 1);

/// True iff p = 1 (mod t) and g^((p-1)/t) = 1 (mod p).
bool splits_completely(const Rational& g, u64 t, u64 p);

/// pi(x;t,1) over odd primes.
u64 count_progression(u64 x, u64 t, const PrimeTable& table);
/// pi(x;t,1) over the primes counted for g.
u64 count_progression(u64 x, u64 t, const PrimeTable& table,
                      const GDecomposition& dec);

/// Odd p <= x, p not dividing disc, with p = 1 (mod t) and (disc/p) = 1.
u64 count_split_quadratic(u64 x, u64 t, i64 disc, const PrimeTable& table);
/// Same, restricted to the primes counted for g (disc = d(g0)).
u64 count_split_quadratic(u64 x, u64 t, const PrimeTable& table,
                          const GDecomposition& dec);

/// Integer numerators of the character aggregates; each has denominator t.
///   linear    = sum_{p = 1 (t)} sum_{d | (h,t)} c_d(r_g(p))
///   quadratic = sum_{p = 1 (t)} sum_{d | (2h,t), d !| h} c_d(r_g(p))
///   remainder = sum_{p = 1 (t)} sum_{d | t, d !| 2h} c_d(r_g(p))
struct CharSums {
  u64 t = 1;
  i64 linear = 0;
  i64 quadratic = 0;
  i64 remainder = 0;

  Fraction L() const { return {linear, static_cast<i64>(t)}; }
  Fraction Q() const { return {quadratic, static_cast<i64>(t)}; }
  Fraction M() const { return L() + Q(); }
};

CharSums char_sums_LQ(const GDecomposition& dec, u64 t, u64 x,
                      const PrimeTable& table, unsigned threads = 1);

/// N_{g,m}(x) and R_{g,m}(x) for every m in [1, x].
struct IndexCounts {
  u64 x = 0;
  u64 counted = 0;
  std::vector<u64> exact;      // exact[m] = N_{g,m}(x)
  std::vector<u64> divisible;  // divisible[m] = R_{g,m}(x)
};

IndexCounts index_counts(const GDecomposition& dec, u64 x,
                         const PrimeTable& table, unsigned threads = 1);

/// pi(x;m,1) and P_{Q(zeta_m, sqrt(g0))}(x) over counted primes for every
/// modulus m <= max_modulus.
struct ProgressionCounts {
  u64 x = 0;
  std::vector<u64> pi;
  std::vector<u64> split;

  /// Moduli m >= x give 0; other moduli beyond the table throw.
  u64 pi_at(u64 m) const;
  u64 split_at(u64 m) const;
};

ProgressionCounts progression_counts(const GDecomposition& dec, u64 x,
                                     u64 max_modulus, const PrimeTable& table);

}  // namespace residx
