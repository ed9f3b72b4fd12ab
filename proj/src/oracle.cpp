#include "residx/oracle.hpp"

#include <cmath>
#include <map>
#include <numbers>

#include "residx/empirical.hpp"
#include "residx/heuristic.hpp"

namespace residx {

double character_sum(u64 n, u64 d, u64 gamma) {
  if (n == 0 || d == 0) fail(ErrorKind::domain, "n and d must be >= 1");
  if (n % d != 0) return 0.0;
  // chi_j(gamma^a) = exp(2 pi i j a / n) has order n / (j, n); the sum is
  // real because j and n - j have the same order.
  double s = 0.0;
  const u64 a = gamma % n;
  for (u64 j = 0; j < n; ++j) {
    if (n / gcd(j, n) != d) continue;
    const u64 k = (j * a) % n;
    s += std::cos(2.0 * std::numbers::pi * static_cast<double>(k) /
                  static_cast<double>(n));
  }
  return s;
}

double indicator_characters_raw(u64 gamma, u64 t, u64 n) {
  if (t == 0 || n == 0 || n % t != 0)
    fail(ErrorKind::domain, "indicator needs t | n");
  double s = 0.0;
  for (const u64 d : divisors(t)) s += character_sum(n, d, gamma);
  return s / static_cast<double>(t);
}

int indicator_f(u64 gamma, u64 t, u64 n, IndicatorMode mode) {
  if (t == 0 || n == 0 || n % t != 0)
    fail(ErrorKind::domain, "indicator needs t | n");
  const u64 index = CyclicGroup{n}.index(gamma);
  switch (mode) {
    case IndicatorMode::definition:
      return index % t == 0 ? 1 : 0;
    case IndicatorMode::characters:
      return static_cast<int>(std::lround(indicator_characters_raw(gamma, t, n)));
    case IndicatorMode::ramanujan: {
      i64 s = 0;
      for (const u64 d : divisors(t)) s += ramanujan_sum(d, index);
      if (s % static_cast<i64>(t) != 0)
        fail(ErrorKind::invariant, "Ramanujan sum total not divisible by t");
      return static_cast<int>(s / static_cast<i64>(t));
    }
  }
  fail(ErrorKind::domain, "unknown indicator mode");
}

ClassProfile::ClassProfile(u64 n, u64 h, int sign, Parity parity) : n_(n) {
  if (n == 0 || h == 0) fail(ErrorKind::domain, "n and h must be >= 1");
  if (sign < 0 && n % 2 != 0)
    fail(ErrorKind::domain, "-1 lies in C_n only for even n");
  const u64 shift = sign < 0 ? n / 2 : 0;
  std::vector<char> seen(n, 0);
  for (u64 k = 0; k < 2 * n; ++k) {
    if (parity == Parity::even && k % 2 != 0) continue;
    if (parity == Parity::odd && k % 2 == 0) continue;
    seen[(k % n * (h % n) + shift) % n] = 1;
  }
  by_index_.assign(n + 1, 0);
  const CyclicGroup group{n};
  for (u64 a = 0; a < n; ++a) {
    if (!seen[a]) continue;
    ++by_index_[group.index(a)];
    ++size_;
  }
}

Fraction ClassProfile::rho(u64 t) const {
  if (t == 0 || n_ % t != 0) return 0;
  u64 hits = 0;
  for (u64 i = t; i <= n_; i += t) hits += by_index_[i];
  return {static_cast<i64>(hits), static_cast<i64>(size_)};
}

Fraction ClassProfile::sigma_direct(u64 t) const {
  if (t == 0 || n_ % t != 0) return 0;
  return {static_cast<i64>(by_index_[t]), static_cast<i64>(size_)};
}

Fraction ClassProfile::sigma_moebius(u64 t) const {
  if (t == 0 || n_ % t != 0) return 0;
  Fraction s = 0;
  for (const u64 d : divisors(n_ / t)) {
    const int mu = moebius(d);
    if (mu != 0) s += Fraction(mu) * rho(d * t);
  }
  return s;
}

Fraction rho_enumerate(const GroupScenario& s) {
  return ClassProfile(s.n, s.h, s.sign, s.parity).rho(s.t);
}

Fraction rho_closed_form(const GroupScenario& s) {
  if (s.n == 0 || s.h == 0 || s.t == 0)
    fail(ErrorKind::domain, "n, h and t must be >= 1");
  if (s.sign < 0 && s.n % 2 != 0)
    fail(ErrorKind::domain, "-1 lies in C_n only for even n");
  if (s.n % s.t != 0) return 0;
  const i64 t = static_cast<i64>(s.t);
  const Fraction linear(static_cast<i64>(gcd(s.h, s.t)), t);
  const Fraction quad(static_cast<i64>(gcd(2 * s.h, s.t)), t);
  const unsigned e = v2(s.h);
  const unsigned tau = v2(s.t);
  const unsigned vn = v2(s.n);
  if (s.sign > 0) {
    switch (s.parity) {
      case Parity::any: return linear;
      case Parity::even: return quad;
      case Parity::odd: return Fraction(2) * linear - quad;
    }
  }
  switch (s.parity) {
    case Parity::any:
      return (vn == tau && tau <= e) ? Fraction(0) : linear;
    case Parity::even:
      return (vn == tau && tau <= e + 1) ? Fraction(0) : quad;
    case Parity::odd:
      if ((vn == tau && tau != e + 1) || (vn >= tau + 1 && tau >= e + 1))
        return 0;
      return quad;
  }
  fail(ErrorKind::domain, "unknown parity");
}

Fraction sigma(const GroupScenario& s, SigmaMode mode) {
  const ClassProfile prof(s.n, s.h, s.sign, s.parity);
  return mode == SigmaMode::direct ? prof.sigma_direct(s.t)
                                   : prof.sigma_moebius(s.t);
}

Fraction sigma_linear_closed_form(u64 n, u64 h, u64 t) {
  if (n == 0 || h == 0 || t == 0)
    fail(ErrorKind::domain, "n, h and t must be >= 1");
  if (n % t != 0) return 0;
  const u64 ht = gcd(h, t);
  if (gcd(n / t, h / ht) != 1) return 0;
  return {static_cast<i64>(ht * euler_phi(n / t)), static_cast<i64>(n)};
}

u64 primitive_root(u64 p, const Factorization& pm1) {
  if (p < 3 || pm1.value != p - 1)
    fail(ErrorKind::domain, "primitive_root needs an odd prime and p-1 factored");
  for (u64 c = 2; c < p; ++c) {
    bool ok = true;
    for (const auto& pp : pm1.factors) {
      if (pow_mod(c, (p - 1) / pp.prime, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return c;
  }
  fail(ErrorKind::invariant, "no primitive root found");
}

PrimeClassProfile::PrimeClassProfile(const GDecomposition& dec, u64 p,
                                     const PrimeTable& table)
    : p_(p) {
  if (!is_counted(dec.g, p))
    fail(ErrorKind::domain, "p is not counted for this base");
  const Factorization pm1 = table.factorize(p - 1);
  const u64 n = p - 1;
  const u64 gamma = primitive_root(p, pm1);
  // Parity of the discrete log of g0 by Euler's criterion.
  const u64 g0 = base_residue(dec.g0, p);
  const bool even = pow_mod(g0, n / 2, p) == 1;
  const u64 step = pow_mod(gamma, dec.h % n, p);
  std::vector<char> seen(p, 0);
  u64 cur = 1;
  for (u64 k = 0; k < 2 * n; ++k) {
    if ((k % 2 == 0) == even) {
      const u64 v = dec.sign < 0 ? (p - cur) % p : cur;
      seen[v] = 1;
    }
    cur = mul_mod(cur, step, p);
  }
  contains_g_ = seen[base_residue(dec.g, p)] != 0;
  by_index_.assign(p, 0);
  for (u64 v = 1; v < p; ++v) {
    if (!seen[v]) continue;
    ++by_index_[n / multiplicative_order(v, p, pm1)];
    ++size_;
  }
}

Fraction PrimeClassProfile::rho(u64 t) const {
  const u64 n = p_ - 1;
  if (t == 0 || n % t != 0) return 0;
  u64 hits = 0;
  for (u64 i = t; i <= n; i += t) hits += by_index_[i];
  return {static_cast<i64>(hits), static_cast<i64>(size_)};
}

Fraction PrimeClassProfile::sigma(u64 t) const {
  const u64 n = p_ - 1;
  if (t == 0 || n % t != 0) return 0;
  return {static_cast<i64>(by_index_[t]), static_cast<i64>(size_)};
}

SigmaWeightReport verify_sigma_equals_w_mu(const GDecomposition& dec, u64 p, u64 t,
                                   const PrimeTable& table) {
  if (t == 0 || (p - 1) % t != 0)
    fail(ErrorKind::domain, "t must divide p - 1");
  const PrimeClassProfile prof(dec, p, table);
  SigmaWeightReport r;
  r.p = p;
  r.t = t;
  r.sigma = prof.sigma(t);
  r.w_mu = weighted_exact_density(dec, t, p, table.factorize(p - 1));
  r.holds = prof.contains_g() && r.sigma == r.w_mu;
  return r;
}

bool moebius_inversion_check(u64 t, u64 n,
                             const std::function<Fraction(u64)>& sigma1) {
  if (t == 0 || n == 0 || n % t != 0)
    fail(ErrorKind::domain, "moebius inversion needs t | n");
  std::vector<u64> ms;
  for (const u64 m : divisors(n))
    if (m % t == 0) ms.push_back(m);
  std::map<u64, Fraction> f, summed, inverted;
  for (const u64 m : ms) f[m] = sigma1(m);
  for (const u64 m : ms) {
    Fraction s = 0, u = 0;
    for (const u64 d : divisors(n / m)) {
      s += f[d * m];
      const int mu = moebius(d);
      if (mu != 0) u += Fraction(mu) * f[d * m];
    }
    summed[m] = s;
    inverted[m] = u;
  }
  for (const u64 m : ms) {
    Fraction back = 0, forward = 0;
    for (const u64 d : divisors(n / m)) {
      const int mu = moebius(d);
      if (mu != 0) back += Fraction(mu) * summed[d * m];
      forward += inverted[d * m];
    }
    if (!(back == f[m]) || !(forward == f[m])) return false;
  }
  return true;
}

}  // namespace residx
