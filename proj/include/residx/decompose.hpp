#pragma once

#include <string>
#include <string_view>

#include "residx/arith.hpp"

namespace residx {

/// Reduced signed fraction num/den with den > 0 and value not in {-1, 0, 1}.
struct Rational {
  i64 num = 2;
  i64 den = 1;

  friend bool operator==(const Rational&, const Rational&) = default;
  std::string str() const;
};

/// Reduces num/den and rejects zero denominators and the excluded bases.
Rational make_rational(i64 num, i64 den);

/// Parses "[-]a" or "[-]a/b" (decimal digits only).
Rational parse_g(std::string_view text);

/// g = sign * g0^h with g0 > 0 not a rational power and h maximal.
struct GDecomposition {
  Rational g;
  int sign = 1;
  Rational g0;  // positive; g0 = 1 never happens
  u64 h = 1;
  unsigned e = 0;  // v2(h)
  i64 disc = 0;    // discriminant of Q(sqrt(g0))
};

GDecomposition decompose_g(const Rational& g);

/// Fundamental discriminant of Q(sqrt(g0)) for a positive non-square g0.
i64 quadratic_discriminant(const Rational& g0);

/// Per-(g, t) quantities shared by the weights, the closed forms and the
/// field degrees.
struct HeuristicParams {
  u64 t = 1;
  unsigned tau = 0;  // v2(t)
  u64 gcd_ht = 1;    // (h, t)
  u64 h_t = 1;       // h / (h, t)
  u64 t_h = 1;       // t / (t, h)
  int eps1 = 0;      // 0, -1, 1 as tau <, =, > e
  int eps2 = 0;      // 1 iff tau > e
};

HeuristicParams derive_params(const GDecomposition& dec, u64 t);

}  // namespace residx
