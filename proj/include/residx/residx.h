#ifndef RESIDX_RESIDX_H
#define RESIDX_RESIDX_H

/*
 * C interface to the residual index library.
 *
 * Objects are opaque handles created and destroyed through this API. Every
 * fallible call returns a residx_status; on failure residx_last_error()
 * describes the error for the calling thread until its next failing call.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(RESIDX_BUILDING_LIBRARY)
#define RESIDX_API __attribute__((visibility("default")))
#else
#define RESIDX_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum residx_status {
  RESIDX_OK = 0,
  RESIDX_ERR_PARSE = 1,           /* malformed base string */
  RESIDX_ERR_EXCLUDED_BASE = 2,   /* g in {-1, 0, 1} */
  RESIDX_ERR_BOUND = 3,           /* sieve limit out of range */
  RESIDX_ERR_DOMAIN = 4,          /* argument outside an operation's domain */
  RESIDX_ERR_CAPABILITY = 5,      /* request exceeds the table or cutoffs */
  RESIDX_ERR_INVARIANT = 6,       /* an internal identity failed */
  RESIDX_ERR_INVALID_ARGUMENT = 7,/* null pointer or similar misuse */
  RESIDX_ERR_INTERNAL = 8
} residx_status;

typedef struct residx_table residx_table;
typedef struct residx_base residx_base;

typedef struct residx_rational {
  int64_t num;
  int64_t den;
} residx_rational;

RESIDX_API const char* residx_status_string(residx_status status);
RESIDX_API const char* residx_last_error(void);

/* ---- prime tables ---- */

/* Sieves primes up to limit (2 <= limit <= 1e9). */
RESIDX_API residx_status residx_table_create(uint64_t limit, residx_table** out);
RESIDX_API void residx_table_destroy(residx_table* table);
RESIDX_API uint64_t residx_table_limit(const residx_table* table);
RESIDX_API uint64_t residx_table_prime_count(const residx_table* table);

/* ---- bases ---- */

/* Parses "[-]a" or "[-]a/b". */
RESIDX_API residx_status residx_base_parse(const char* text, residx_base** out);
RESIDX_API void residx_base_destroy(residx_base* base);
/* Canonical "a" or "a/b"; owned by the handle. */
RESIDX_API const char* residx_base_text(const residx_base* base);

typedef struct residx_decomposition {
  residx_rational g;
  int sign;
  residx_rational g0;
  uint64_t h;
  unsigned e;
  int64_t disc;
} residx_decomposition;

RESIDX_API residx_status residx_base_decomposition(const residx_base* base,
                                                   residx_decomposition* out);

typedef struct residx_params {
  uint64_t t;
  unsigned tau;
  uint64_t gcd_ht;
  uint64_t h_t;
  uint64_t t_h;
  int eps1;
  int eps2;
} residx_params;

RESIDX_API residx_status residx_base_params(const residx_base* base, uint64_t t,
                                            residx_params* out);

/* ---- counting ---- */

/* *counted is 0 for p = 2 and p dividing num*den; *index is r_g(p) otherwise. */
RESIDX_API residx_status residx_residual_index(const residx_base* base, uint64_t p,
                                               const residx_table* table,
                                               int* counted, uint64_t* index);

typedef struct residx_counts {
  uint64_t N;       /* r_g(p) = t */
  uint64_t R;       /* t | r_g(p) */
  uint64_t pi_t;    /* p = 1 (mod t) */
  uint64_t split_t; /* p splits completely in Q(zeta_t, sqrt(g0)) */
} residx_counts;

RESIDX_API residx_status residx_count(const residx_base* base, uint64_t t, uint64_t x,
                                      const residx_table* table, unsigned threads,
                                      residx_counts* out);

typedef struct residx_heuristics {
  double naive;
  double quadratic;
  residx_rational H;
  residx_rational M;
  residx_rational L;
  residx_rational Q;
} residx_heuristics;

RESIDX_API residx_status residx_heuristic(const residx_base* base, uint64_t t,
                                          uint64_t x, const residx_table* table,
                                          unsigned threads, residx_heuristics* out);

/* ---- densities ---- */

typedef struct residx_degree {
  uint64_t t;
  uint64_t degree;
  residx_rational nu;
} residx_degree;

RESIDX_API residx_status residx_kummer_degree(const residx_base* base, uint64_t t,
                                              residx_degree* out);

typedef struct residx_truncated {
  double value;
  uint64_t cutoff;
  double error_bound;
} residx_truncated;

RESIDX_API residx_status residx_density(const residx_base* base, uint64_t t, double tol,
                                        residx_truncated* out);
RESIDX_API residx_status residx_wagstaff_sum(uint64_t h, uint64_t t, uint64_t m,
                                             double tol, residx_truncated* out);
RESIDX_API residx_status residx_artin_constant(double tol, residx_truncated* out);
RESIDX_API residx_status residx_log_integral(double x, double* out);

/* ---- report rows ---- */

typedef struct residx_report {
  residx_rational g;
  uint64_t t;
  uint64_t x;
  uint64_t N;
  uint64_t R;
  uint64_t pi_t;
  uint64_t split_t;
  double naive;
  double quadratic;
  double M;
  double A;
  double A_error;
  double Li;
  double A_times_Li;
  double ratio_N_over_ALi; /* NaN when A * Li = 0 */
} residx_report;

RESIDX_API residx_status residx_report_row(const residx_base* base, uint64_t t,
                                           uint64_t x, const residx_table* table,
                                           double tol, unsigned threads,
                                           residx_report* out);

/* ---- verification suites ---- */

typedef struct residx_verify_config {
  uint64_t max_n;
  uint64_t max_h;
  uint64_t max_p;
  uint64_t max_t;
} residx_verify_config;

RESIDX_API void residx_verify_config_default(residx_verify_config* out);
RESIDX_API size_t residx_suite_count(void);
/* NULL when index is out of range. */
RESIDX_API const char* residx_suite_name(size_t index);

typedef struct residx_suite_result {
  uint64_t checks;
  uint64_t violations;
  char first_violation[256];
  char notes[256];
} residx_suite_result;

/* Runs one suite on the default test bases. Violations are reported in *out,
 * not as an error status. */
RESIDX_API residx_status residx_verify_suite(const char* name,
                                             const residx_verify_config* config,
                                             residx_suite_result* out);

#ifdef __cplusplus
}
#endif

#endif /* RESIDX_RESIDX_H */
