#pragma once

// Small exact rationals over int64 with 128-bit intermediates. Every result is
// kept in lowest terms with a positive denominator; overflow raises an
// invariant error instead of wrapping.

#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

#include "residx/error.hpp"

namespace residx {

class Fraction {
 public:
  constexpr Fraction() = default;
  constexpr Fraction(std::int64_t value) : num_(value), den_(1) {}  // NOLINT
  Fraction(std::int64_t num, std::int64_t den) { assign(num, den); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }
  bool is_zero() const { return num_ == 0; }

  friend Fraction operator+(const Fraction& a, const Fraction& b) {
    const __int128 n = static_cast<__int128>(a.num_) * b.den_ +
                       static_cast<__int128>(b.num_) * a.den_;
    const __int128 d = static_cast<__int128>(a.den_) * b.den_;
    return from_wide(n, d);
  }
  friend Fraction operator-(const Fraction& a, const Fraction& b) {
    return a + Fraction(-b.num_, b.den_);
  }
  friend Fraction operator*(const Fraction& a, const Fraction& b) {
    return from_wide(static_cast<__int128>(a.num_) * b.num_,
                     static_cast<__int128>(a.den_) * b.den_);
  }
  friend Fraction operator/(const Fraction& a, const Fraction& b) {
    if (b.num_ == 0) fail(ErrorKind::domain, "fraction division by zero");
    return from_wide(static_cast<__int128>(a.num_) * b.den_,
                     static_cast<__int128>(a.den_) * b.num_);
  }
  Fraction& operator+=(const Fraction& o) { return *this = *this + o; }
  Fraction& operator-=(const Fraction& o) { return *this = *this - o; }
  Fraction& operator*=(const Fraction& o) { return *this = *this * o; }

  friend bool operator==(const Fraction& a, const Fraction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator<(const Fraction& a, const Fraction& b) {
    return static_cast<__int128>(a.num_) * b.den_ <
           static_cast<__int128>(b.num_) * a.den_;
  }

  std::string str() const {
    return den_ == 1 ? std::to_string(num_)
                     : std::to_string(num_) + "/" + std::to_string(den_);
  }
  friend std::ostream& operator<<(std::ostream& os, const Fraction& f) {
    return os << f.str();
  }

 private:
  static __int128 gcd_wide(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      const __int128 r = a % b;
      a = b;
      b = r;
    }
    return a;
  }

  static Fraction from_wide(__int128 n, __int128 d) {
    if (d == 0) fail(ErrorKind::domain, "fraction with zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    const __int128 g = gcd_wide(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    constexpr __int128 kMax = INT64_MAX;
    if (n > kMax || n < -kMax || d > kMax)
      fail(ErrorKind::invariant, "fraction overflow");
    Fraction f;
    f.num_ = static_cast<std::int64_t>(n);
    f.den_ = static_cast<std::int64_t>(d);
    return f;
  }

  void assign(std::int64_t num, std::int64_t den) {
    *this = from_wide(num, den);
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace residx
