// End-to-end acceptance run: one PASS/FAIL line per criterion, nonzero exit
// if any criterion fails.
#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "residx/density.hpp"
#include "residx/empirical.hpp"
#include "residx/heuristic.hpp"
#include "residx/report.hpp"
#include "residx/verify.hpp"

using namespace residx;

namespace {

constexpr u64 kMaxT = 12;
constexpr u64 kBigX = 1'000'000;
constexpr u64 kExactX = 100'000;
constexpr double kTol = 1e-6;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

Outcome suite_outcome(const std::string& name, const VerifyConfig& cfg,
                      double max_seconds = 0) {
  const auto start = std::chrono::steady_clock::now();
  const SuiteResult r = run_suite(name, cfg);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  Outcome o;
  o.pass = r.ok() && (max_seconds <= 0 || secs <= max_seconds);
  o.detail = std::to_string(r.checks) + " checks, " + std::to_string(r.violations) +
             " violations, " + fmt(secs) + " s";
  if (!r.ok()) o.detail += "; first: " + r.first_violation;
  return o;
}

// Report rows for the whole matrix at x = 1e6, computed once.
struct Row {
  std::string g;
  u64 t;
  CountReport rep;
  HeuristicParams params;
  u64 degree;
  u64 counted;  // counted primes <= x for this g
};

const std::vector<Row>& matrix_rows() {
  static const std::vector<Row> rows = [] {
    std::vector<Row> out;
    const PrimeTable table(kBigX);
    for (const Rational& g : default_test_bases()) {
      const auto dec = decompose_g(g);
      const u64 counted = count_progression(kBigX, 1, table, dec);
      for (u64 t = 1; t <= kMaxT; ++t)
        out.push_back({g.str(), t, make_count_report(dec, t, kBigX, table, kTol, 1),
                       derive_params(dec, t), kummer_degree(dec, t).degree, counted});
    }
    return out;
  }();
  return rows;
}

bool within_band(double observed, double expected) {
  const double band = std::max(0.02 * expected, 3 * std::sqrt(std::max(expected, 0.0)) + 10);
  return std::abs(observed - expected) <= band;
}

std::string where(const Row& r) { return "g=" + r.g + " t=" + std::to_string(r.t); }

Outcome c1_splitting() {
  VerifyConfig cfg;
  cfg.max_p = 100'000;
  cfg.max_t = 24;
  return suite_outcome("splitting-criterion", cfg, 60);
}

Outcome c2_characters() {
  VerifyConfig cfg;
  cfg.max_n = 200;
  return suite_outcome("character-identities", cfg);
}

Outcome c3_rho_sigma() {
  VerifyConfig cfg;
  cfg.max_n = 360;
  cfg.max_h = 8;
  return suite_outcome("rho-sigma-closed-forms", cfg);
}

Outcome c4_sigma_weight() {
  VerifyConfig cfg;
  cfg.max_p = 2000;
  cfg.max_t = 24;
  Outcome a = suite_outcome("sigma-weight-identity", cfg);
  const Outcome b = suite_outcome("moebius-inversion", cfg);
  return {a.pass && b.pass, "sigma = w mu: " + a.detail + "; inversion: " + b.detail};
}

Outcome c5_exact_identities() {
  const PrimeTable table(kExactX);
  u64 checks = 0;
  std::vector<std::string> bad;
  auto check = [&](bool ok, const std::string& what) {
    ++checks;
    if (!ok && bad.size() < 5) bad.push_back(what);
  };
  for (const Rational& g : default_test_bases()) {
    const auto dec = decompose_g(g);
    const IndexCounts ic = index_counts(dec, kExactX, table);
    const ProgressionCounts pc = progression_counts(dec, kExactX, 2 * kExactX, table);
    for (u64 t = 1; t <= kMaxT; ++t) {
      const std::string at = "g=" + g.str() + " t=" + std::to_string(t);
      const Fraction m = closed_form_M(dec, t, pc);
      const CharSums cs = char_sums_LQ(dec, t, kExactX, table);
      check(m == cs.L() + cs.Q(), at + " M != L + Q");
      check(sum_divisible_H(dec, t, kExactX, table) == m, at + " H != M");
      i64 n = 0;
      for (u64 k = 1; k * t <= kExactX - 1; ++k)
        n += moebius(k) * static_cast<i64>(ic.divisible[k * t]);
      check(n == static_cast<i64>(ic.exact[t]), at + " N != sum mu R");
      check(moebius_sum_M_exact(dec, t, pc, table) ==
                sum_quadratic_exact(dec, t, kExactX, table),
            at + " sum mu M != weighted sum");
    }
  }
  std::string detail = std::to_string(checks) + " exact checks at x=1e5";
  for (const auto& b : bad) detail += "; " + b;
  return {bad.empty(), detail};
}

Outcome c6_R_vs_M() {
  u64 bad = 0;
  std::string first;
  double worst = 0;
  for (const Row& r : matrix_rows()) {
    const double M = r.rep.M.to_double();
    const double R = static_cast<double>(r.rep.R);
    worst = std::max(worst, std::abs(R - M));
    if (!within_band(R, M) && bad++ == 0) first = where(r);
  }
  std::string d = std::to_string(matrix_rows().size()) + " pairs, max |R-M| = " + fmt(worst);
  if (bad) d += "; " + std::to_string(bad) + " outside band, first " + first;
  return {bad == 0, d};
}

Outcome c7_N_vs_quadratic() {
  u64 bad = 0;
  std::string first, witness;
  for (const Row& r : matrix_rows()) {
    const double N = static_cast<double>(r.rep.N);
    if (!within_band(N, r.rep.quadratic) && bad++ == 0) first = where(r);
    if (witness.empty() && r.params.eps1 != 0 &&
        std::abs(r.rep.naive - N) > std::abs(r.rep.quadratic - N))
      witness = where(r) + " (N=" + std::to_string(r.rep.N) + ", naive=" +
                fmt(r.rep.naive) + ", quadratic=" + fmt(r.rep.quadratic) + ")";
  }
  std::string d;
  if (bad) d = std::to_string(bad) + " outside band, first " + first + "; ";
  d += witness.empty() ? "no pair where the naive sum is worse" : "naive worse at " + witness;
  return {bad == 0 && !witness.empty(), d};
}

// prod_{q <= Q} (1 - 1/(q(q-1))) from a separate plain sieve; the infinite
// product lies in [P (1 - 1/Q), P].
std::pair<double, double> euler_product_artin(u64 Q) {
  std::vector<bool> composite(Q + 1, false);
  long double prod = 1;
  for (u64 i = 2; i <= Q; ++i) {
    if (composite[i]) continue;
    prod *= 1.0L - 1.0L / (static_cast<long double>(i) * (i - 1));
    for (u64 j = i * i; j <= Q; j += i) composite[j] = true;
  }
  return {static_cast<double>(prod), static_cast<double>(prod) / static_cast<double>(Q)};
}

Outcome c8_density() {
  u64 tested = 0, bad = 0;
  std::string first;
  double worst = 0;
  for (const Row& r : matrix_rows()) {
    if (r.rep.A < 0.01) continue;
    ++tested;
    const double rel = std::abs(static_cast<double>(r.rep.N) / r.rep.Li / r.rep.A - 1);
    worst = std::max(worst, rel);
    if (rel > 0.05 && bad++ == 0) first = where(r) + " rel " + fmt(rel);
  }
  const auto [euler, slack] = euler_product_artin(10'000'000);
  const double a21 = artin_density_A(decompose_g({2, 1}), 1, kTol).value;
  const bool artin_ok = std::abs(a21 - euler) <= 1e-6 + slack;
  std::string d = std::to_string(tested) + " pairs with A >= 0.01, worst relative " + fmt(worst);
  if (bad) d += "; " + std::to_string(bad) + " beyond 5%, first " + first;
  d += "; A(2,1)=" + fmt(a21) + " vs Euler product " + fmt(euler);
  return {bad == 0 && artin_ok, d};
}

Outcome c9_degrees() {
  u64 bad = 0;
  std::string first;
  double worst = 0;
  for (const Row& r : matrix_rows()) {
    const double q = 1.0 / static_cast<double>(r.degree);
    const double n = static_cast<double>(r.counted);
    const double frac = static_cast<double>(r.rep.R) / n;
    const double sd = std::sqrt(q * (1 - q) / n);
    const double z = sd > 0 ? std::abs(frac - q) / sd : (frac == q ? 0 : INFINITY);
    worst = std::max(worst, z);
    if (z > 4 && bad++ == 0) first = where(r) + " z=" + fmt(z);
  }
  std::string d = std::to_string(matrix_rows().size()) + " pairs, max |z| = " + fmt(worst);
  if (bad) d += "; " + std::to_string(bad) + " beyond 4 sd, first " + first;
  return {bad == 0, d};
}

std::optional<std::string> run_capture(const std::string& cmd) {
  FILE* f = popen(cmd.c_str(), "r");
  if (!f) return std::nullopt;
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, f)) > 0) out.append(buf, n);
  const int status = pclose(f);
  if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) return std::nullopt;
  return out;
}

Outcome c10_determinism() {
  const std::string base = std::string(RESIDX_CLI_PATH) +
                           " report --g 2,3,5,8,-2,-3,-4,9/25,1/2"
                           " --t 1,2,3,4,5,6,7,8,9,10,11,12 --x 1e6 --format csv --threads ";
  std::vector<std::string> outs;
  for (const char* threads : {"1", "4", "8"}) {
    const auto out = run_capture(base + threads);
    if (!out) return {false, std::string("report failed with --threads ") + threads};
    outs.push_back(*out);
  }
  const bool same = outs[0] == outs[1] && outs[0] == outs[2];
  return {same && !outs[0].empty(),
          std::to_string(outs[0].size()) + " bytes; " +
              (same ? "identical for 1, 4, 8 threads" : "outputs differ")};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"splitting criterion, p <= 1e5, t <= 24", c1_splitting},
      {"character identities, n <= 200", c2_characters},
      {"rho and sigma closed forms, n <= 360, h <= 8", c3_rho_sigma},
      {"sigma = w mu and w/r inversion, p <= 2000", c4_sigma_weight},
      {"exact sum identities at x = 1e5", c5_exact_identities},
      {"R vs M at x = 1e6", c6_R_vs_M},
      {"N vs quadratic sum at x = 1e6", c7_N_vs_quadratic},
      {"N/Li vs A(g,t) at x = 1e6", c8_density},
      {"split fractions vs field degrees at x = 1e6", c9_degrees},
      {"report output independent of threads", c10_determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << (i + 1) << "] " << criteria[i].first
              << ": " << o.detail << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed"
            << std::endl;
  return failed == 0 ? 0 : 1;
}
