#include "residx/decompose.hpp"

#include <charconv>
#include <cstdlib>

#include "residx/error.hpp"

namespace residx {

std::string Rational::str() const {
  return den == 1 ? std::to_string(num)
                  : std::to_string(num) + "/" + std::to_string(den);
}

Rational make_rational(i64 num, i64 den) {
  if (den == 0) fail(ErrorKind::parse, "zero denominator");
  if (num == INT64_MIN || den == INT64_MIN)
    fail(ErrorKind::parse, "value out of 64-bit range");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const u64 g = gcd(static_cast<u64>(std::llabs(num)), static_cast<u64>(den));
  if (g > 1) {
    num /= static_cast<i64>(g);
    den /= static_cast<i64>(g);
  }
  if (den == 1 && (num == 0 || num == 1 || num == -1))
    fail(ErrorKind::excluded_base,
         "g = " + std::to_string(num) + " is excluded (g must avoid -1, 0, 1)");
  if (num == 0)
    fail(ErrorKind::excluded_base, "g = 0 is excluded");
  return {num, den};
}

namespace {

i64 parse_digits(std::string_view digits, std::string_view whole) {
  if (digits.empty())
    fail(ErrorKind::parse, "malformed base '" + std::string(whole) + "'");
  for (const char c : digits)
    if (c < '0' || c > '9')
      fail(ErrorKind::parse, "malformed base '" + std::string(whole) + "'");
  u64 value = 0;
  const auto [ptr, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size() ||
      value > static_cast<u64>(INT64_MAX))
    fail(ErrorKind::parse, "base '" + std::string(whole) + "' out of range");
  return static_cast<i64>(value);
}

}  // namespace

Rational parse_g(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const i64 num = parse_digits(body.substr(0, slash), text);
  const i64 den =
      slash == std::string_view::npos ? 1 : parse_digits(body.substr(slash + 1), text);
  if (den == 0) fail(ErrorKind::parse, "zero denominator in '" + std::string(text) + "'");
  return make_rational(negative ? -num : num, den);
}

namespace {

// base^exp, failing on overflow.
u64 checked_pow(u64 base, u64 exp) {
  u64 r = 1;
  for (u64 i = 0; i < exp; ++i) {
    if (__builtin_mul_overflow(r, base, &r))
      fail(ErrorKind::invariant, "overflow rebuilding g from its decomposition");
  }
  return r;
}

// Squarefree kernel contribution: product of primes with odd exponent.
u64 odd_part_product(const Factorization& f) {
  u64 r = 1;
  for (const auto& [p, e] : f.factors)
    if (e % 2 == 1 && __builtin_mul_overflow(r, p, &r))
      fail(ErrorKind::capability, "squarefree part exceeds 64 bits");
  return r;
}

}  // namespace

i64 quadratic_discriminant(const Rational& g0) {
  if (g0.num <= 0 || g0.den <= 0)
    fail(ErrorKind::domain, "discriminant needs a positive rational");
  const Factorization fm = factorize_any(static_cast<u64>(g0.num));
  const Factorization fn = factorize_any(static_cast<u64>(g0.den));
  // m and n are coprime, so the squarefree part of m*n is the product of the
  // two squarefree parts.
  u64 d = 0;
  if (__builtin_mul_overflow(odd_part_product(fm), odd_part_product(fn), &d))
    fail(ErrorKind::capability, "squarefree part exceeds 64 bits");
  if (d == 1)
    fail(ErrorKind::domain,
         g0.str() + " is a rational square; Q(sqrt) has no quadratic discriminant");
  if (d % 4 == 1) return static_cast<i64>(d);
  if (d > static_cast<u64>(INT64_MAX) / 4)
    fail(ErrorKind::capability, "discriminant exceeds 64 bits");
  return static_cast<i64>(4 * d);
}

GDecomposition decompose_g(const Rational& g) {
  GDecomposition dec;
  dec.g = g;
  dec.sign = g.num < 0 ? -1 : 1;
  const u64 a = static_cast<u64>(std::llabs(g.num));
  const u64 b = static_cast<u64>(g.den);
  const Factorization fa = factorize_any(a);
  const Factorization fb = factorize_any(b);
  u64 h = 0;
  for (const auto& pe : fa.factors) h = gcd(h, pe.exponent);
  for (const auto& pe : fb.factors) h = gcd(h, pe.exponent);
  if (h == 0) fail(ErrorKind::excluded_base, "|g| = 1 is excluded");
  u64 m = 1, n = 1;
  for (const auto& [p, e] : fa.factors) m *= checked_pow(p, e / h);
  for (const auto& [p, e] : fb.factors) n *= checked_pow(p, e / h);
  if (checked_pow(m, h) != a || checked_pow(n, h) != b)
    fail(ErrorKind::invariant, "decomposition does not reproduce " + g.str());
  dec.g0 = {static_cast<i64>(m), static_cast<i64>(n)};
  dec.h = h;
  dec.e = v2(h);
  dec.disc = quadratic_discriminant(dec.g0);
  return dec;
}

HeuristicParams derive_params(const GDecomposition& dec, u64 t) {
  if (t == 0) fail(ErrorKind::domain, "t must be >= 1");
  HeuristicParams p;
  p.t = t;
  p.tau = v2(t);
  p.gcd_ht = gcd(dec.h, t);
  p.h_t = dec.h / p.gcd_ht;
  p.t_h = t / p.gcd_ht;
  if (p.tau < dec.e)
    p.eps1 = 0;
  else if (p.tau == dec.e)
    p.eps1 = -1;
  else
    p.eps1 = 1;
  p.eps2 = p.tau > dec.e ? 1 : 0;
  return p;
}

}  // namespace residx
