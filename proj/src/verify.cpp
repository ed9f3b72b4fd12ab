#include "residx/verify.hpp"

#include <cmath>
#include <sstream>

#include "residx/empirical.hpp"
#include "residx/heuristic.hpp"
#include "residx/oracle.hpp"

namespace residx {

namespace {

template <class Describe>
void record(SuiteResult& r, bool ok, Describe describe) {
  ++r.checks;
  if (ok) return;
  if (r.violations == 0) r.first_violation = describe();
  ++r.violations;
}

template <class... Parts>
std::string cat(const Parts&... parts) {
  std::ostringstream os;
  (os << ... << parts);
  return os.str();
}

const char* parity_name(Parity p) {
  switch (p) {
    case Parity::even: return "even";
    case Parity::odd: return "odd";
    case Parity::any: return "*";
  }
  return "?";
}

struct Variant {
  int sign;
  Parity parity;
};

constexpr Variant kVariants[] = {
    {1, Parity::any},   {1, Parity::even},  {1, Parity::odd},
    {-1, Parity::any},  {-1, Parity::even}, {-1, Parity::odd},
};

// (g0/p) by Euler's criterion, independent of the Jacobi symbol code.
int euler_legendre(const GDecomposition& dec, u64 p) {
  return pow_mod(base_residue(dec.g0, p), (p - 1) / 2, p) == 1 ? 1 : -1;
}

SuiteResult splitting_suite(const VerifyConfig& c) {
  SuiteResult r;
  r.name = "splitting-criterion";
  const PrimeTable table(std::max<u64>(c.max_p, 2));
  for (const Rational& g : c.bases) {
    for (const u64 p : table.primes_upto(c.max_p)) {
      const auto out = residual_index(g, p, table);
      if (out.status != PrimeStatus::counted) continue;
      for (u64 t = 1; t <= c.max_t; ++t) {
        record(r, (out.index % t == 0) == splits_completely(g, t, p), [&] {
          return cat("g=", g.str(), " p=", p, " t=", t, " index=", out.index);
        });
      }
    }
  }
  return r;
}

SuiteResult character_suite(const VerifyConfig& c) {
  SuiteResult r;
  r.name = "character-identities";
  for (u64 n = 1; n <= c.max_n; ++n) {
    const CyclicGroup group{n};
    const auto divs = divisors(n);
    // sums[i][a] = sum over characters of order divs[i] at gamma^a
    std::vector<std::vector<double>> sums(divs.size(), std::vector<double>(n));
    for (std::size_t i = 0; i < divs.size(); ++i) {
      for (u64 a = 0; a < n; ++a) {
        sums[i][a] = character_sum(n, divs[i], a);
        const i64 c_d = ramanujan_sum(divs[i], group.index(a));
        record(r, std::abs(sums[i][a] - static_cast<double>(c_d)) < 1e-6, [&] {
          return cat("character sum n=", n, " d=", divs[i], " a=", a, " got ",
                     sums[i][a], " expected c_d(index)=", c_d);
        });
      }
    }
    for (std::size_t ti = 0; ti < divs.size(); ++ti) {
      const u64 t = divs[ti];
      for (u64 a = 0; a < n; ++a) {
        const int def = indicator_f(a, t, n, IndicatorMode::definition);
        double raw = 0.0;
        for (std::size_t i = 0; i <= ti; ++i)
          if (t % divs[i] == 0) raw += sums[i][a];
        raw /= static_cast<double>(t);
        record(r, std::abs(raw - def) < 1e-6, [&] {
          return cat("indicator characters n=", n, " t=", t, " a=", a, " raw=", raw);
        });
        record(r, indicator_f(a, t, n, IndicatorMode::ramanujan) == def, [&] {
          return cat("indicator ramanujan n=", n, " t=", t, " a=", a);
        });
      }
    }
  }
  // sum_{d | m} c_d(k) = m [m | k]
  for (u64 m = 1; m <= c.max_n; ++m) {
    const auto divs = divisors(m);
    for (u64 k = 0; k <= c.max_n; ++k) {
      i64 s = 0;
      for (const u64 d : divs) s += ramanujan_sum(d, k);
      const i64 expected = k % m == 0 ? static_cast<i64>(m) : 0;
      record(r, s == expected,
             [&] { return cat("divisor sum of c_d(", k, ") over d | ", m, " = ", s); });
    }
  }
  return r;
}

SuiteResult rho_sigma_suite(const VerifyConfig& c) {
  SuiteResult r;
  r.name = "rho-sigma-closed-forms";
  u64 flagged = 0;
  for (u64 n = 1; n <= c.max_n; ++n) {
    const auto divs = divisors(n);
    for (u64 h = 1; h <= c.max_h; ++h) {
      for (const Variant v : kVariants) {
        if (v.sign < 0 && n % 2 != 0) {
          ++flagged;
          continue;
        }
        const ClassProfile prof(n, h, v.sign, v.parity);
        for (const u64 t : divs) {
          const GroupScenario s{n, h, t, v.sign, v.parity};
          auto where = [&] {
            return cat("n=", n, " h=", h, " t=", t, " sign=", v.sign,
                       " parity=", parity_name(v.parity));
          };
          const Fraction rho = prof.rho(t);
          const Fraction closed = rho_closed_form(s);
          record(r, rho == closed, [&] {
            return cat("rho ", where(), ": enumerated ", rho, ", closed form ", closed);
          });
          const Fraction direct = prof.sigma_direct(t);
          const Fraction inverted = prof.sigma_moebius(t);
          record(r, direct == inverted, [&] {
            return cat("sigma ", where(), ": direct ", direct, ", moebius ", inverted);
          });
          if (v.sign > 0 && v.parity == Parity::any) {
            const Fraction lin = sigma_linear_closed_form(n, h, t);
            record(r, direct == lin, [&] {
              return cat("sigma_1,* ", where(), ": direct ", direct, ", closed form ", lin);
            });
          }
        }
      }
    }
  }
  r.notes.push_back(cat(flagged, " scenarios with sign -1 and odd n skipped"));
  return r;
}

SuiteResult sigma_weight_suite(const VerifyConfig& c) {
  SuiteResult r;
  r.name = "sigma-weight-identity";
  const PrimeTable table(std::max<u64>(c.max_p, 2));
  u64 literal_mismatch = 0, literal_total = 0;
  for (const Rational& g : c.bases) {
    const GDecomposition dec = decompose_g(g);
    for (const u64 p : table.primes_upto(c.max_p)) {
      if (!is_counted(g, p)) continue;
      const PrimeClassProfile prof(dec, p, table);
      record(r, prof.contains_g(),
             [&] { return cat("class of g=", g.str(), " mod ", p, " misses g"); });
      const Factorization pm1 = table.factorize(p - 1);
      for (const u64 t : divisors(pm1)) {
        if (t > c.max_t) break;
        auto where = [&] { return cat("g=", g.str(), " p=", p, " t=", t); };
        const HeuristicParams q = derive_params(dec, t);
        const Fraction w_mu = weighted_exact_density(dec, t, p, pm1);
        const Fraction sigma = prof.sigma(t);
        record(r, sigma == w_mu, [&] {
          return cat("sigma = w mu fails at ", where(), ": ", sigma, " vs ", w_mu);
        });
        const int rw = weight_r(make_weight_context(dec, q, p));
        const Fraction rho_expected(rw, static_cast<i64>(q.t_h));
        record(r, prof.rho(t) == rho_expected, [&] {
          return cat("rho = r/t_h fails at ", where(), ": ", prof.rho(t), " vs ",
                     rho_expected);
        });
        const Fraction from_r = exact_density_from_r(dec, t, p, pm1);
        record(r, from_r == w_mu, [&] {
          return cat("moebius sum of r fails at ", where(), ": ", from_r, " vs ", w_mu);
        });
        const Fraction from_w = r_from_w(dec, t, p, pm1);
        record(r, from_w == Fraction(rw), [&] {
          return cat("r from w fails at ", where(), ": ", from_w, " vs ", rw);
        });
        const i64 th = static_cast<i64>(q.t_h);
        ++literal_total;
        if (!(from_w * Fraction(1, th * th) == Fraction(rw))) ++literal_mismatch;
      }
    }
  }
  r.notes.push_back(cat("r with the sum divided by t_h instead of multiplied: ",
                        literal_mismatch, " of ", literal_total, " cases disagree"));
  return r;
}

SuiteResult moebius_suite(const VerifyConfig& c) {
  SuiteResult r;
  r.name = "moebius-inversion";
  record(r, moebius_inversion_check(1, 12, [](u64) { return Fraction(0); }),
         [] { return std::string("zero function"); });
  for (u64 n = 1; n <= c.max_n; ++n) {
    const auto divs = divisors(n);
    for (u64 h = 1; h <= c.max_h; ++h) {
      for (const Variant v : kVariants) {
        if (v.sign < 0 && n % 2 != 0) continue;
        const ClassProfile prof(n, h, v.sign, v.parity);
        auto where = [&] {
          return cat("n=", n, " h=", h, " sign=", v.sign, " parity=", parity_name(v.parity));
        };
        for (const u64 t : divs) {
          Fraction s = 0;
          for (const u64 d : divisors(n / t)) s += prof.sigma_direct(d * t);
          record(r, s == prof.rho(t), [&] {
            return cat("rho is not the divisor sum of sigma at ", where(), " t=", t);
          });
        }
        record(r,
               moebius_inversion_check(
                   1, n, [&](u64 m) { return prof.sigma_direct(m); }),
               [&] { return cat("inversion fails for sigma at ", where()); });
        record(r,
               moebius_inversion_check(1, n, [&](u64 m) { return prof.rho(m); }),
               [&] { return cat("inversion fails for rho at ", where()); });
      }
    }
  }
  return r;
}

SuiteResult charsum_suite(const VerifyConfig& c) {
  SuiteResult r;
  r.name = "character-sum-closed-forms";
  const PrimeTable table(std::max<u64>(c.max_p, 2));
  for (const Rational& g : c.bases) {
    const GDecomposition dec = decompose_g(g);
    for (const u64 p : table.primes_upto(c.max_p)) {
      const auto out = residual_index(g, p, table);
      if (out.status != PrimeStatus::counted) continue;
      const int leg = euler_legendre(dec, p);
      for (u64 t = 1; t <= c.max_t; ++t) {
        const HeuristicParams q = derive_params(dec, t);
        const u64 g1 = q.gcd_ht;
        const u64 g2 = gcd(2 * dec.h, t);
        auto where = [&] { return cat("g=", g.str(), " p=", p, " t=", t); };
        if ((p - 1) % g1 == 0) {
          i64 lin = 0;
          for (const u64 d : divisors(g1)) lin += ramanujan_sum(d, out.index);
          i64 expected = static_cast<i64>(g1);
          if (dec.sign < 0 && (p - 1) % (2 * g1) != 0) expected = 0;
          record(r, lin == expected, [&] {
            return cat("linear part at ", where(), ": ", lin, " vs ", expected);
          });
        }
        if ((p - 1) % g2 == 0) {
          i64 quad = 0;
          for (const u64 d : divisors(g2))
            if (dec.h % d != 0) quad += ramanujan_sum(d, out.index);
          i64 expected = q.eps2 * leg * static_cast<i64>(g1);
          if (dec.sign < 0 && q.eps2 != 0) {
            const bool odd = (((p - 1) >> (dec.e + 1)) & 1) != 0;
            if (odd) expected = -expected;
          }
          record(r, quad == expected, [&] {
            return cat("quadratic part at ", where(), ": ", quad, " vs ", expected);
          });
        }
      }
    }
  }
  return r;
}

SuiteResult counting_suite(const VerifyConfig& c) {
  SuiteResult r;
  r.name = "counting-identities";
  const u64 x = std::max<u64>(c.max_p, 2);
  const PrimeTable table(x);
  for (const Rational& g : c.bases) {
    const GDecomposition dec = decompose_g(g);
    const IndexCounts ic = index_counts(dec, x, table);
    u64 total = 0;
    for (u64 m = 1; m <= x; ++m) total += ic.exact[m];
    record(r, total == ic.counted, [&] {
      return cat("g=", g.str(), ": exact counts sum to ", total, " of ", ic.counted);
    });
    for (u64 t = 1; t <= c.max_t; ++t) {
      auto where = [&] { return cat("g=", g.str(), " t=", t, " x=", x); };
      const u64 n = count_exact_index(dec, t, x, table);
      const u64 rr = count_divisible_index(dec, t, x, table);
      record(r, n == ic.exact[t] && rr == ic.divisible[t],
             [&] { return cat("streamed and batched counts differ at ", where()); });
      u64 from_exact = 0;
      i64 incl_excl = 0;
      for (u64 k = 1; k * t <= x; ++k) {
        from_exact += ic.exact[k * t];
        incl_excl += moebius(k) * static_cast<i64>(ic.divisible[k * t]);
      }
      record(r, from_exact == rr,
             [&] { return cat("R is not the sum of N over multiples at ", where()); });
      record(r, incl_excl == static_cast<i64>(n),
             [&] { return cat("inclusion-exclusion fails at ", where()); });
      const CharSums cs = char_sums_LQ(dec, t, x, table);
      record(r, cs.linear + cs.quadratic + cs.remainder == static_cast<i64>(t * rr),
             [&] { return cat("R != L + Q + remainder at ", where()); });
      const Fraction m = closed_form_M(dec, t, x, table);
      record(r, m == cs.M(), [&] {
        return cat("M closed form ", m, " != L + Q ", cs.M(), " at ", where());
      });
      const Fraction hsum = sum_divisible_H(dec, t, x, table);
      record(r, hsum == m,
             [&] { return cat("H ", hsum, " != M ", m, " at ", where()); });
    }
  }
  return r;
}

}  // namespace

const std::vector<Rational>& default_test_bases() {
  static const std::vector<Rational> bases = {
      {2, 1}, {3, 1}, {5, 1}, {8, 1}, {-2, 1}, {-3, 1}, {-4, 1}, {9, 25}, {1, 2}};
  return bases;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "splitting-criterion", "character-identities",
      "rho-sigma-closed-forms",    "moebius-inversion",
      "sigma-weight-identity",          "character-sum-closed-forms",
      "counting-identities"};
  return names;
}

SuiteResult run_suite(std::string_view name, const VerifyConfig& config) {
  if (name == "splitting-criterion") return splitting_suite(config);
  if (name == "character-identities") return character_suite(config);
  if (name == "rho-sigma-closed-forms") return rho_sigma_suite(config);
  if (name == "moebius-inversion") return moebius_suite(config);
  if (name == "sigma-weight-identity") return sigma_weight_suite(config);
  if (name == "character-sum-closed-forms") return charsum_suite(config);
  if (name == "counting-identities") return counting_suite(config);
  fail(ErrorKind::domain, "unknown suite '" + std::string(name) + "'");
}

}  // namespace residx
