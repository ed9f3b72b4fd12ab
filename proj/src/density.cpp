#include "residx/density.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace residx {

namespace {

// 2 * nu, so that nu in {1/2, 1, 2} becomes {1, 2, 4}.
int twice_nu(const GDecomposition& dec, u64 t, u64 t_h) {
  const u64 d = static_cast<u64>(dec.disc);
  if (dec.sign > 0) return (t_h % 2 == 0 && t % d == 0) ? 4 : 2;
  if (t % 2 == 1) return 2;
  if (t_h % 2 == 1) return 1;
  if (t_h % 4 == 2) return (t % d != 0 && (2 * t) % d == 0) ? 4 : 2;
  return t % d == 0 ? 4 : 2;
}

// Upper bound for sum_{d <= K} mu(d)^2 / (d phi(d)): the full Euler product
// prod_q (1 + 1/(q(q-1))) = zeta(2) zeta(3) / zeta(6) = 1.94359...
constexpr double kKphiSumBound = 1.9436;

u64 cutoff_for(double scale, double tol) {
  const double k =
      std::ceil(scale * (2.0 * kKphiSumBound + std::numbers::pi * std::numbers::pi / 9.0) / tol);
  if (!(k < 1e12))
    fail(ErrorKind::capability, "tolerance too small for a direct k-sum");
  return std::max<u64>(7, static_cast<u64>(k));
}

// Calls fn(k, phi(k), mu(k)) for every squarefree k in [1, K] in increasing
// order, sieving in blocks.
template <class Fn>
void for_each_squarefree(u64 K, Fn fn) {
  u64 root = static_cast<u64>(std::sqrt(static_cast<double>(K)));
  while ((root + 1) * (root + 1) <= K) ++root;
  const auto small = segmented_primes(std::max<u64>(root, 2));
  constexpr u64 kBlock = 1u << 16;
  std::vector<u64> rem(kBlock), phi(kBlock);
  std::vector<signed char> mu(kBlock);
  for (u64 lo = 1; lo <= K; lo += kBlock) {
    const u64 hi = std::min(K, lo + kBlock - 1);
    const u64 len = hi - lo + 1;
    for (u64 i = 0; i < len; ++i) {
      rem[i] = lo + i;
      phi[i] = 1;
      mu[i] = 1;
    }
    for (const u64 q : small) {
      if (q * q > hi) break;
      for (u64 m = (lo + q - 1) / q * q; m <= hi; m += q) {
        const u64 i = m - lo;
        if (mu[i] == 0) continue;
        if (m % (q * q) == 0) {
          mu[i] = 0;
          continue;
        }
        rem[i] /= q;
        phi[i] *= q - 1;
        mu[i] = static_cast<signed char>(-mu[i]);
      }
    }
    for (u64 i = 0; i < len; ++i) {
      if (mu[i] == 0) continue;
      if (rem[i] > 1) {
        phi[i] *= rem[i] - 1;
        mu[i] = static_cast<signed char>(-mu[i]);
      }
      fn(lo + i, phi[i], static_cast<int>(mu[i]));
    }
  }
}

struct KSum {
  long double value = 0;
  long double kphi_partial = 0;  // sum_{k <= K} mu^2 / (k phi(k))
};

KSum density_ksum(const GDecomposition& dec, u64 t, u64 K) {
  const u64 phi_t = euler_phi(t);
  std::vector<u64> phi_div(t + 1, 0);
  for (const u64 d : divisors(t)) phi_div[d] = euler_phi(d);
  KSum out;
  for_each_squarefree(K, [&](u64 k, u64 phi_k, int mu) {
    out.kphi_partial += 1.0L / (static_cast<long double>(k) * phi_k);
    const u64 kt = k * t;
    const u64 g = gcd(k, t);
    // phi(kt) = phi(k) phi(t) g / phi(g)
    const long double phi_kt =
        static_cast<long double>(phi_k) * phi_t * g / phi_div[g];
    const u64 kt_h = kt / gcd(dec.h, kt);
    const long double degree =
        2.0L * phi_kt * static_cast<long double>(kt_h) / twice_nu(dec, kt, kt_h);
    out.value += mu / degree;
  });
  return out;
}

}  // namespace

DegreeResult kummer_degree(const GDecomposition& dec, u64 t) {
  const HeuristicParams q = derive_params(dec, t);
  const u64 phi_t = euler_phi(t);
  const int nu2 = twice_nu(dec, t, q.t_h);
  const u64 base = phi_t * q.t_h * 2;
  if (base % nu2 != 0)
    fail(ErrorKind::invariant, "field degree is not an integer");
  DegreeResult r;
  r.t = t;
  r.degree = base / nu2;
  r.nu = Fraction(nu2, 2);
  return r;
}

double kphi_tail_bound(u64 K, double partial_sum) {
  if (K < 7) fail(ErrorKind::domain, "tail bound needs K >= 7");
  const double k = static_cast<double>(K);
  // sum_{k>K} 1/(k phi(k)) = sum_d mu(d)^2/(phi(d) d^2) sum_{m > K/d} 1/m^2;
  // the inner sum is <= 2d/K for d <= K and <= pi^2/6 otherwise, and
  // phi(d) >= sqrt(d) for d >= 7.
  return 2.0 * partial_sum / k +
         std::numbers::pi * std::numbers::pi / 9.0 / (k * std::sqrt(k));
}

TruncatedValue artin_density_A_upto(const GDecomposition& dec, u64 t, u64 K) {
  if (t == 0) fail(ErrorKind::domain, "t must be >= 1");
  if (K < 7) fail(ErrorKind::domain, "cutoff must be >= 7");
  const KSum s = density_ksum(dec, t, K);
  const double scale =
      2.0 * static_cast<double>(dec.h) / (static_cast<double>(t) * euler_phi(t));
  return {static_cast<double>(s.value), K,
          scale * kphi_tail_bound(K, static_cast<double>(s.kphi_partial))};
}

TruncatedValue artin_density_A(const GDecomposition& dec, u64 t, double tol) {
  if (!(tol > 0)) fail(ErrorKind::domain, "tolerance must be positive");
  if (t == 0) fail(ErrorKind::domain, "t must be >= 1");
  // |1/degree(kt)| <= 2 (h,kt) / (kt phi(kt)) <= (2h / (t phi(t))) / (k phi(k))
  const double scale =
      2.0 * static_cast<double>(dec.h) / (static_cast<double>(t) * euler_phi(t));
  return artin_density_A_upto(dec, t, cutoff_for(scale, tol));
}

TruncatedValue wagstaff_sum_S(u64 h, u64 t, u64 m, double tol) {
  if (!(tol > 0)) fail(ErrorKind::domain, "tolerance must be positive");
  if (h == 0 || t == 0 || m == 0)
    fail(ErrorKind::domain, "h, t and m must be >= 1");
  const u64 phi_t = euler_phi(t);
  const double scale =
      static_cast<double>(h) / (static_cast<double>(t) * phi_t);
  const u64 K = cutoff_for(scale, tol);
  std::vector<u64> phi_div(t + 1, 0);
  for (const u64 d : divisors(t)) phi_div[d] = euler_phi(d);
  long double value = 0, partial = 0;
  for_each_squarefree(K, [&](u64 k, u64 phi_k, int mu) {
    partial += 1.0L / (static_cast<long double>(k) * phi_k);
    const u64 kt = k * t;
    if (kt % m != 0) return;
    const u64 g = gcd(k, t);
    const long double phi_kt =
        static_cast<long double>(phi_k) * phi_t * g / phi_div[g];
    value += mu * static_cast<long double>(gcd(kt, h)) /
             (static_cast<long double>(kt) * phi_kt);
  });
  return {static_cast<double>(value), K,
          scale * kphi_tail_bound(K, static_cast<double>(partial))};
}

double artin_partial_product(u64 qmax) {
  long double prod = 1;
  for (const u64 q : segmented_primes(qmax))
    prod *= 1.0L - 1.0L / (static_cast<long double>(q) * (q - 1));
  return static_cast<double>(prod);
}

TruncatedValue artin_constant(double tol) {
  if (!(tol > 0)) fail(ErrorKind::domain, "tolerance must be positive");
  // prod_{q > Q} (1 - 1/(q(q-1))) >= 1 - sum_{n > Q} 1/(n(n-1)) = 1 - 1/Q,
  // so the constant lies in [P_Q (1 - 1/Q), P_Q] with P_Q <= 1/2.
  const double qd = std::ceil(1.0 / (4.0 * tol));
  if (!(qd < 4e9)) fail(ErrorKind::capability, "tolerance too small");
  const u64 Q = std::max<u64>(2, static_cast<u64>(qd));
  const double p = artin_partial_product(Q);
  return {p * (1.0 - 0.5 / static_cast<double>(Q)), Q,
          p * 0.5 / static_cast<double>(Q)};
}

}  // namespace residx
