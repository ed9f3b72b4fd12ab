#include "residx/arith.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "residx/error.hpp"

namespace residx {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::parse: return "parse error";
    case ErrorKind::excluded_base: return "excluded base";
    case ErrorKind::bound: return "bound error";
    case ErrorKind::domain: return "domain error";
    case ErrorKind::capability: return "capability error";
    case ErrorKind::invariant: return "invariant violation";
  }
  return "error";
}

namespace {

std::vector<std::uint32_t> simple_sieve(u64 limit) {
  std::vector<std::uint32_t> out;
  if (limit < 2) return out;
  std::vector<bool> composite(limit + 1, false);
  for (u64 i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(static_cast<std::uint32_t>(i));
    for (u64 j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

u64 isqrt(u64 n) {
  u64 r = static_cast<u64>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace

std::vector<std::uint32_t> segmented_primes(u64 limit) {
  std::vector<std::uint32_t> out;
  if (limit < 2) return out;
  const u64 root = isqrt(limit);
  const auto base = simple_sieve(root);
  constexpr u64 kSegment = 1u << 18;
  std::vector<char> mark(kSegment);
  for (u64 low = 2; low <= limit; low += kSegment) {
    const u64 high = std::min(limit, low + kSegment - 1);
    std::fill(mark.begin(), mark.end(), 0);
    for (const u64 p : base) {
      if (p * p > high) break;
      u64 start = std::max(p * p, (low + p - 1) / p * p);
      for (u64 j = start; j <= high; j += p) mark[j - low] = 1;
    }
    for (u64 n = low; n <= high; ++n)
      if (!mark[n - low]) out.push_back(static_cast<std::uint32_t>(n));
  }
  return out;
}

u64 PrimeTable::spf_cap_from_env() {
  if (const char* env = std::getenv("RESIDX_SPF_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return v;
  }
  return kDefaultSpfCap;
}

PrimeTable::PrimeTable(u64 limit, u64 spf_cap) : limit_(limit) {
  if (limit < 2 || limit > kMaxLimit)
    fail(ErrorKind::bound, "sieve limit must lie in [2, " +
                               std::to_string(kMaxLimit) + "], got " +
                               std::to_string(limit));
  primes_ = segmented_primes(limit);
  if (limit <= spf_cap) {
    spf_.assign(limit + 1, 0);
    for (const u64 p : primes_) {
      if (p * p > limit) break;
      for (u64 j = p * p; j <= limit; j += p)
        if (spf_[j] == 0) spf_[j] = static_cast<std::uint32_t>(p);
    }
    for (u64 n = 2; n <= limit; ++n)
      if (spf_[n] == 0) spf_[n] = static_cast<std::uint32_t>(n);
  }
}

std::span<const std::uint32_t> PrimeTable::primes_upto(u64 x) const {
  const auto end = std::upper_bound(primes_.begin(), primes_.end(),
                                    std::min(x, limit_));
  return {primes_.data(), static_cast<std::size_t>(end - primes_.begin())};
}

u64 PrimeTable::spf(u64 n) const {
  if (n < 2 || n > limit_) fail(ErrorKind::domain, "spf argument out of range");
  if (has_spf()) return spf_[n];
  for (const u64 p : primes_) {
    if (p * p > n) break;
    if (n % p == 0) return p;
  }
  return n;
}

bool PrimeTable::is_prime(u64 n) const {
  if (n < 2 || n > limit_) return is_prime_u64(n);
  return std::binary_search(primes_.begin(), primes_.end(), n);
}

Factorization PrimeTable::factorize(u64 n) const {
  if (n == 0) fail(ErrorKind::domain, "cannot factor 0");
  Factorization f;
  f.value = n;
  auto push = [&f](u64 p) {
    if (!f.factors.empty() && f.factors.back().prime == p)
      ++f.factors.back().exponent;
    else
      f.factors.push_back({p, 1});
  };
  if (n <= limit_ && has_spf()) {
    while (n > 1) {
      const u64 p = spf_[n];
      push(p);
      n /= p;
    }
    return f;
  }
  if (n / limit_ > limit_)
    fail(ErrorKind::capability, std::to_string(n) +
                                    " exceeds the square of the sieve limit");
  for (const u64 p : primes_) {
    if (p * p > n) break;
    while (n % p == 0) {
      push(p);
      n /= p;
    }
  }
  if (n > 1) push(n);
  return f;
}

PrimeTable build_prime_table(u64 limit) { return PrimeTable(limit); }

Factorization factorize(u64 n, const PrimeTable& table) {
  return table.factorize(n);
}

u64 mul_mod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

u64 pow_mod(u64 base, u64 exp, u64 m) {
  if (m == 1) return 0;
  u64 result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (const u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (const u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

u64 gcd(u64 a, u64 b) {
  while (b != 0) {
    const u64 r = a % b;
    a = b;
    b = r;
  }
  return a;
}

u64 lcm(u64 a, u64 b) { return a / gcd(a, b) * b; }

unsigned v2(u64 n) {
  if (n == 0) fail(ErrorKind::domain, "v2(0) is undefined");
  return static_cast<unsigned>(__builtin_ctzll(n));
}

namespace {

// Brent's variant of Pollard rho; n is odd, composite and not a prime power
// of a small prime.
u64 pollard_brent(u64 n) {
  for (u64 c = 1;; ++c) {
    u64 y = 2, x = 2, q = 1, g = 1, ys = 2;
    const u64 m = 128;
    u64 r = 1;
    auto f = [&](u64 v) { return (mul_mod(v, v, n) + c) % n; };
    do {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      u64 k = 0;
      do {
        ys = y;
        for (u64 i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r <<= 1;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(u64 n, std::vector<u64>& out) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    out.push_back(n);
    return;
  }
  const u64 d = pollard_brent(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

Factorization factorize_any(u64 n) {
  if (n == 0) fail(ErrorKind::domain, "cannot factor 0");
  Factorization f;
  f.value = n;
  std::vector<u64> primes;
  for (u64 p = 2; p < 1000 && p * p <= n; ++p) {
    while (n % p == 0) {
      primes.push_back(p);
      n /= p;
    }
  }
  factor_into(n, primes);
  std::sort(primes.begin(), primes.end());
  for (const u64 p : primes) {
    if (!f.factors.empty() && f.factors.back().prime == p)
      ++f.factors.back().exponent;
    else
      f.factors.push_back({p, 1});
  }
  return f;
}

u64 euler_phi(const Factorization& f) {
  u64 phi = 1;
  for (const auto& [p, e] : f.factors) {
    phi *= p - 1;
    for (unsigned i = 1; i < e; ++i) phi *= p;
  }
  return phi;
}

int moebius(const Factorization& f) {
  for (const auto& pe : f.factors)
    if (pe.exponent > 1) return 0;
  return f.factors.size() % 2 == 0 ? 1 : -1;
}

u64 euler_phi(u64 n) { return euler_phi(factorize_any(n)); }
int moebius(u64 n) { return moebius(factorize_any(n)); }

std::vector<u64> divisors(const Factorization& f) {
  std::vector<u64> out{1};
  for (const auto& [p, e] : f.factors) {
    const std::size_t base = out.size();
    u64 pk = 1;
    for (unsigned i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<u64> divisors(u64 n) { return divisors(factorize_any(n)); }

i64 ramanujan_sum(u64 d, u64 n) {
  if (d == 0) fail(ErrorKind::domain, "Ramanujan sum needs d >= 1");
  const u64 g = n == 0 ? d : gcd(d, n);
  const Factorization fd = factorize_any(d);
  const Factorization fq = factorize_any(d / g);
  const int mu = moebius(fq);
  if (mu == 0) return 0;
  return mu * static_cast<i64>(euler_phi(fd) / euler_phi(fq));
}

int jacobi_symbol(i64 d, u64 n) {
  if (n % 2 == 0) fail(ErrorKind::domain, "Jacobi symbol needs an odd modulus");
  i64 r = d % static_cast<i64>(n);
  if (r < 0) r += static_cast<i64>(n);
  u64 a = static_cast<u64>(r);
  int result = 1;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      const u64 m8 = n % 8;
      if (m8 == 3 || m8 == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

int kronecker_symbol(i64 d, u64 p) {
  if (p % 2 == 0 || !is_prime_u64(p))
    fail(ErrorKind::domain,
         "quadratic symbol needs an odd prime, got " + std::to_string(p));
  return jacobi_symbol(d, p);
}

u64 multiplicative_order(u64 a, u64 p, const Factorization& fac_pm1) {
  a %= p;
  if (a == 0)
    fail(ErrorKind::domain, "element is 0 modulo " + std::to_string(p));
  u64 order = p - 1;
  for (const auto& [q, e] : fac_pm1.factors) {
    for (unsigned i = 0; i < e; ++i) {
      if (pow_mod(a, order / q, p) != 1) break;
      order /= q;
    }
  }
  return order;
}

namespace {

double inv_log(double t) { return 1.0 / std::log(t); }

double simpson(double a, double b, double fa, double fm, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_simpson(double a, double b, double fa, double fm, double fb,
                        double whole, double eps, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = inv_log(lm);
  const double frm = inv_log(rm);
  const double left = simpson(a, m, fa, flm, fm);
  const double right = simpson(m, b, fm, frm, fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::fabs(delta) <= 15.0 * eps)
    return left + right + delta / 15.0;
  return adaptive_simpson(a, m, fa, flm, fm, left, 0.5 * eps, depth - 1) +
         adaptive_simpson(m, b, fm, frm, fb, right, 0.5 * eps, depth - 1);
}

double integrate_piece(double a, double b) {
  const double fa = inv_log(a);
  const double fb = inv_log(b);
  const double fm = inv_log(0.5 * (a + b));
  const double whole = simpson(a, b, fa, fm, fb);
  // The integrand is positive, so a relative target on the crude estimate
  // bounds the relative error of the piece.
  const double eps = 1e-12 * std::fabs(whole);
  return adaptive_simpson(a, b, fa, fm, fb, whole, eps, 48);
}

}  // namespace

double log_integral(double x) {
  if (!(x >= 2.0)) fail(ErrorKind::domain, "Li(x) needs x >= 2");
  if (x == 2.0) return 0.0;
  // Pieces [2,10], [10,100], [100,1000], ... keep the curvature of 1/log t
  // comparable inside each interval.
  double total = 0.0;
  double a = 2.0;
  double b = 10.0;
  while (a < x) {
    const double hi = std::min(b, x);
    total += integrate_piece(a, hi);
    a = hi;
    b *= 10.0;
  }
  return total;
}

}  // namespace residx
