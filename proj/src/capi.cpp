#include "residx/residx.h"

#include <cstring>
#include <new>
#include <string>

#include "residx/density.hpp"
#include "residx/empirical.hpp"
#include "residx/heuristic.hpp"
#include "residx/report.hpp"
#include "residx/verify.hpp"

struct residx_table {
  residx::PrimeTable table;
};

struct residx_base {
  residx::GDecomposition dec;
  std::string text;
};

namespace {

thread_local std::string last_error;

residx_status status_of(residx::ErrorKind kind) {
  using residx::ErrorKind;
  switch (kind) {
    case ErrorKind::parse: return RESIDX_ERR_PARSE;
    case ErrorKind::excluded_base: return RESIDX_ERR_EXCLUDED_BASE;
    case ErrorKind::bound: return RESIDX_ERR_BOUND;
    case ErrorKind::domain: return RESIDX_ERR_DOMAIN;
    case ErrorKind::capability: return RESIDX_ERR_CAPABILITY;
    case ErrorKind::invariant: return RESIDX_ERR_INVARIANT;
  }
  return RESIDX_ERR_INTERNAL;
}

template <class Fn>
residx_status guarded(Fn fn) {
  try {
    fn();
    return RESIDX_OK;
  } catch (const residx::Error& e) {
    last_error = e.what();
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return RESIDX_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return RESIDX_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return RESIDX_ERR_INTERNAL;
  }
}

residx_status null_argument(const char* what) {
  last_error = std::string("null argument: ") + what;
  return RESIDX_ERR_INVALID_ARGUMENT;
}

residx_rational to_c(const residx::Fraction& f) { return {f.num(), f.den()}; }
residx_rational to_c(const residx::Rational& r) { return {r.num, r.den}; }

void copy_text(char* dst, std::size_t size, const std::string& src) {
  const std::size_t n = std::min(size - 1, src.size());
  std::memcpy(dst, src.data(), n);
  dst[n] = '\0';
}

}  // namespace

extern "C" {

const char* residx_status_string(residx_status status) {
  switch (status) {
    case RESIDX_OK: return "ok";
    case RESIDX_ERR_PARSE: return "parse error";
    case RESIDX_ERR_EXCLUDED_BASE: return "excluded base";
    case RESIDX_ERR_BOUND: return "bound error";
    case RESIDX_ERR_DOMAIN: return "domain error";
    case RESIDX_ERR_CAPABILITY: return "capability error";
    case RESIDX_ERR_INVARIANT: return "invariant violation";
    case RESIDX_ERR_INVALID_ARGUMENT: return "invalid argument";
    case RESIDX_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* residx_last_error(void) { return last_error.c_str(); }

residx_status residx_table_create(uint64_t limit, residx_table** out) {
  if (!out) return null_argument("out");
  return guarded([&] { *out = new residx_table{residx::PrimeTable(limit)}; });
}

void residx_table_destroy(residx_table* table) { delete table; }

uint64_t residx_table_limit(const residx_table* table) {
  return table ? table->table.limit() : 0;
}

uint64_t residx_table_prime_count(const residx_table* table) {
  return table ? table->table.primes().size() : 0;
}

residx_status residx_base_parse(const char* text, residx_base** out) {
  if (!text) return null_argument("text");
  if (!out) return null_argument("out");
  return guarded([&] {
    const residx::GDecomposition dec = residx::decompose_g(residx::parse_g(text));
    *out = new residx_base{dec, dec.g.str()};
  });
}

void residx_base_destroy(residx_base* base) { delete base; }

const char* residx_base_text(const residx_base* base) {
  return base ? base->text.c_str() : "";
}

residx_status residx_base_decomposition(const residx_base* base,
                                        residx_decomposition* out) {
  if (!base) return null_argument("base");
  if (!out) return null_argument("out");
  const residx::GDecomposition& d = base->dec;
  *out = {to_c(d.g), d.sign, to_c(d.g0), d.h, d.e, d.disc};
  return RESIDX_OK;
}

residx_status residx_base_params(const residx_base* base, uint64_t t,
                                 residx_params* out) {
  if (!base) return null_argument("base");
  if (!out) return null_argument("out");
  return guarded([&] {
    const residx::HeuristicParams q = residx::derive_params(base->dec, t);
    *out = {q.t, q.tau, q.gcd_ht, q.h_t, q.t_h, q.eps1, q.eps2};
  });
}

residx_status residx_residual_index(const residx_base* base, uint64_t p,
                                    const residx_table* table, int* counted,
                                    uint64_t* index) {
  if (!base) return null_argument("base");
  if (!table) return null_argument("table");
  if (!counted || !index) return null_argument("counted/index");
  return guarded([&] {
    if (p > table->table.limit())
      residx::fail(residx::ErrorKind::capability, "p exceeds the sieve limit");
    if (!table->table.is_prime(p))
      residx::fail(residx::ErrorKind::domain, std::to_string(p) + " is not prime");
    const auto r = residx::residual_index(base->dec.g, p, table->table);
    *counted = r.status == residx::PrimeStatus::counted ? 1 : 0;
    *index = r.index;
  });
}

residx_status residx_count(const residx_base* base, uint64_t t, uint64_t x,
                           const residx_table* table, unsigned threads,
                           residx_counts* out) {
  if (!base) return null_argument("base");
  if (!table) return null_argument("table");
  if (!out) return null_argument("out");
  return guarded([&] {
    const auto& dec = base->dec;
    const auto& tab = table->table;
    residx_counts c;
    c.N = residx::count_exact_index(dec, t, x, tab, threads);
    c.R = residx::count_divisible_index(dec, t, x, tab, threads);
    c.pi_t = residx::count_progression(x, t, tab, dec);
    c.split_t = residx::count_split_quadratic(x, t, tab, dec);
    *out = c;
  });
}

residx_status residx_heuristic(const residx_base* base, uint64_t t, uint64_t x,
                               const residx_table* table, unsigned threads,
                               residx_heuristics* out) {
  if (!base) return null_argument("base");
  if (!table) return null_argument("table");
  if (!out) return null_argument("out");
  return guarded([&] {
    const auto& dec = base->dec;
    const auto& tab = table->table;
    residx_heuristics h;
    h.naive = residx::sum_naive(dec, t, x, tab, threads);
    h.quadratic = residx::sum_quadratic(dec, t, x, tab, threads);
    h.H = to_c(residx::sum_divisible_H(dec, t, x, tab, threads));
    h.M = to_c(residx::closed_form_M(dec, t, x, tab));
    const residx::CharSums cs = residx::char_sums_LQ(dec, t, x, tab, threads);
    h.L = to_c(cs.L());
    h.Q = to_c(cs.Q());
    *out = h;
  });
}

residx_status residx_kummer_degree(const residx_base* base, uint64_t t,
                                   residx_degree* out) {
  if (!base) return null_argument("base");
  if (!out) return null_argument("out");
  return guarded([&] {
    const residx::DegreeResult d = residx::kummer_degree(base->dec, t);
    *out = {d.t, d.degree, to_c(d.nu)};
  });
}

residx_status residx_density(const residx_base* base, uint64_t t, double tol,
                             residx_truncated* out) {
  if (!base) return null_argument("base");
  if (!out) return null_argument("out");
  return guarded([&] {
    const auto v = residx::artin_density_A(base->dec, t, tol);
    *out = {v.value, v.cutoff, v.error_bound};
  });
}

residx_status residx_wagstaff_sum(uint64_t h, uint64_t t, uint64_t m, double tol,
                                  residx_truncated* out) {
  if (!out) return null_argument("out");
  return guarded([&] {
    const auto v = residx::wagstaff_sum_S(h, t, m, tol);
    *out = {v.value, v.cutoff, v.error_bound};
  });
}

residx_status residx_artin_constant(double tol, residx_truncated* out) {
  if (!out) return null_argument("out");
  return guarded([&] {
    const auto v = residx::artin_constant(tol);
    *out = {v.value, v.cutoff, v.error_bound};
  });
}

residx_status residx_log_integral(double x, double* out) {
  if (!out) return null_argument("out");
  return guarded([&] { *out = residx::log_integral(x); });
}

residx_status residx_report_row(const residx_base* base, uint64_t t, uint64_t x,
                                const residx_table* table, double tol,
                                unsigned threads, residx_report* out) {
  if (!base) return null_argument("base");
  if (!table) return null_argument("table");
  if (!out) return null_argument("out");
  return guarded([&] {
    const residx::CountReport r =
        residx::make_count_report(base->dec, t, x, table->table, tol, threads);
    residx_report c;
    c.g = to_c(r.g);
    c.t = r.t;
    c.x = r.x;
    c.N = r.N;
    c.R = r.R;
    c.pi_t = r.pi_t;
    c.split_t = r.split_t;
    c.naive = r.naive;
    c.quadratic = r.quadratic;
    c.M = r.M.to_double();
    c.A = r.A;
    c.A_error = r.A_error;
    c.Li = r.Li;
    c.A_times_Li = r.A_times_Li();
    c.ratio_N_over_ALi = r.ratio_N_over_ALi();
    *out = c;
  });
}

void residx_verify_config_default(residx_verify_config* out) {
  if (!out) return;
  const residx::VerifyConfig d;
  *out = {d.max_n, d.max_h, d.max_p, d.max_t};
}

size_t residx_suite_count(void) { return residx::suite_names().size(); }

const char* residx_suite_name(size_t index) {
  const auto& names = residx::suite_names();
  return index < names.size() ? names[index].c_str() : nullptr;
}

residx_status residx_verify_suite(const char* name,
                                  const residx_verify_config* config,
                                  residx_suite_result* out) {
  if (!name) return null_argument("name");
  if (!out) return null_argument("out");
  return guarded([&] {
    residx::VerifyConfig cfg;
    if (config) {
      cfg.max_n = config->max_n;
      cfg.max_h = config->max_h;
      cfg.max_p = config->max_p;
      cfg.max_t = config->max_t;
    }
    const residx::SuiteResult r = residx::run_suite(name, cfg);
    out->checks = r.checks;
    out->violations = r.violations;
    copy_text(out->first_violation, sizeof out->first_violation, r.first_violation);
    std::string notes;
    for (const auto& n : r.notes) notes += (notes.empty() ? "" : "; ") + n;
    copy_text(out->notes, sizeof out->notes, notes);
  });
}

}  // extern "C"
