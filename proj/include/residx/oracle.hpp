#pragma once

// Brute-force models of finite cyclic groups used to check the indicator,
// rho and sigma identities exactly.
//
// C_n is modelled additively: the element gamma^a is the exponent a in
// [0, n), its index [G : <gamma^a>] is gcd(a, n) (so the identity has index
// n) and -1 is the exponent n/2.

#include <functional>
#include <vector>

#include "residx/arith.hpp"
#include "residx/decompose.hpp"
#include "residx/fraction.hpp"

namespace residx {

struct CyclicGroup {
  u64 n = 1;

  u64 index(u64 a) const { return gcd(a % n, n); }
};

enum class IndicatorMode { definition, characters, ramanujan };

/// sum over characters of exact order d on C_n of chi(gamma), d | n.
/// Floating point; the imaginary part cancels.
double character_sum(u64 n, u64 d, u64 gamma);

/// (1/t) sum_{d | t} sum_{ord chi = d} chi(gamma) before rounding.
double indicator_characters_raw(u64 gamma, u64 t, u64 n);

/// f_{gamma,t}(C_n) = [t | index(gamma)], evaluated in the chosen mode.
int indicator_f(u64 gamma, u64 t, u64 n, IndicatorMode mode);

enum class Parity { even, odd, any };

/// The class sign * {gamma^(k h)} with k restricted to the given parity,
/// inside C_n, and the index t being asked about.
struct GroupScenario {
  u64 n = 1;
  u64 h = 1;
  u64 t = 1;
  int sign = 1;
  Parity parity = Parity::any;
};

/// Histogram of indices over one class of C_n; answers rho and sigma for
/// every t at once.
class ClassProfile {
 public:
  ClassProfile(u64 n, u64 h, int sign, Parity parity);

  u64 n() const { return n_; }
  u64 size() const { return size_; }
  /// Fraction of the class whose index is divisible by t (0 when t !| n).
  Fraction rho(u64 t) const;
  /// Fraction of the class whose index is exactly t.
  Fraction sigma_direct(u64 t) const;
  /// sum_{d | n/t} mu(d) rho(dt).
  Fraction sigma_moebius(u64 t) const;

 private:
  u64 n_;
  u64 size_ = 0;
  std::vector<u64> by_index_;  // by_index_[i] = elements with index i
};

Fraction rho_enumerate(const GroupScenario& s);

/// Closed forms for every (sign, parity) combination; sign -1 needs n even.
Fraction rho_closed_form(const GroupScenario& s);

enum class SigmaMode { moebius, direct };

Fraction sigma(const GroupScenario& s, SigmaMode mode);

/// (h,t) phi(n/t) / n when (n/t, h_t) = 1, else 0.
Fraction sigma_linear_closed_form(u64 n, u64 h, u64 t);

/// Smallest primitive root modulo the odd prime p.
u64 primitive_root(u64 p, const Factorization& pm1);

/// The class of g mod p inside (Z/pZ)*: sign(g) * {gamma^(k h)} with k even
/// when (d(g0)/p) = 1 and odd otherwise, enumerated as residues with their
/// indices from multiplicative orders.
class PrimeClassProfile {
 public:
  PrimeClassProfile(const GDecomposition& dec, u64 p, const PrimeTable& table);

  u64 p() const { return p_; }
  u64 size() const { return size_; }
  bool contains_g() const { return contains_g_; }
  Fraction rho(u64 t) const;
  Fraction sigma(u64 t) const;

 private:
  u64 p_;
  u64 size_ = 0;
  bool contains_g_ = false;
  std::vector<u64> by_index_;
};

struct SigmaWeightReport {
  u64 p = 0;
  u64 t = 0;
  Fraction sigma;  // enumerated in (Z/pZ)*
  Fraction w_mu;   // w_{g,t}(p) (h,t) phi((p-1)/t) / (p-1)
  bool holds = false;
};

SigmaWeightReport verify_sigma_equals_w_mu(const GDecomposition& dec, u64 p, u64 t,
                                   const PrimeTable& table);

/// For every m with t | m | n: with sigma2(m) = sum_{d | n/m} sigma1(dm),
/// checks sigma1(m) = sum_{d | n/m} mu(d) sigma2(dm); then the converse,
/// treating sigma1 as the summatory side.
bool moebius_inversion_check(u64 t, u64 n,
                             const std::function<Fraction(u64)>& sigma1);

}  // namespace residx
