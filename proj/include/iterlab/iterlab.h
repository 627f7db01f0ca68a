/* iterlab — compositions of fractional Brownian motions and Cauchy
 * processes: densities, samplers, moment/Mellin analytics, governing-
 * equation residual checks and distributional-identity tests.
 *
 * C API: opaque handles + status codes. All functions returning itl_status
 * set *out parameters only on ITL_OK; itl_last_error() describes the most
 * recent failure on the calling thread.
 */
#ifndef ITERLAB_H
#define ITERLAB_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum itl_status {
    ITL_OK = 0,
    ITL_EINVAL = 1,        /* bad argument / parse error */
    ITL_EDOMAIN = 2,       /* input outside the operation's domain */
    ITL_ENOCONV = 3,       /* quadrature failed to converge */
    ITL_ESINGULAR = 4,     /* evaluation exactly on a singular locus */
    ITL_EGRID = 5,         /* grid too coarse for the spectral operator */
    ITL_EEMBED = 6,        /* circulant embedding failure */
    ITL_EOVERFLOW = 7,     /* value exceeds double range */
    ITL_ESERIES = 8,       /* series truncation failed to converge */
    ITL_EUNSUPPORTED = 9,  /* model lacks the requested capability */
    ITL_EINTERNAL = 10
} itl_status;

const char* itl_version(void);
/* Thread-local message for the last failing call. */
const char* itl_last_error(void);

/* ---- process models ---------------------------------------------------- */

typedef struct itl_model itl_model;

/* Grammar: name[:key=val[,key=val]*] with names
 *   fbm, itfbm, chain, j, scaled, prodfbm, cauchy, cbm, bc, cc, halfprod,
 *   recipcc
 * e.g. "fbm:H=0.5", "itfbm:H1=0.6,H2=0.4", "j:n=1,H=0.25",
 *      "chain:H1=0.6,H2=0.7,H3=0.8", "scaled:K=0.3,H=0.6",
 *      "prodfbm:n=2,H=0.8". */
itl_status itl_model_parse(const char* spec, itl_model** out);
void itl_model_free(itl_model* m);
/* Canonical spelling; buffer of cap bytes, NUL-terminated. */
itl_status itl_model_name(const itl_model* m, char* buf, size_t cap);
int itl_model_has_density(const itl_model* m);

/* ---- densities ---------------------------------------------------------- */

itl_status itl_density(const itl_model* m, double x, double t, double* value, double* err_estimate);
itl_status itl_cdf(const itl_model* m, double x, double t, double* value);
/* Iterated-Cauchy density via the integral form and via the
 * exponential-weight representation (cross-check oracles). */
itl_status itl_density_cc_integral(double x, double t, double* value);
itl_status itl_density_cc_expweights(double x, double t, double* value);

/* ---- sampling ----------------------------------------------------------- */

/* n reproducible draws from the marginal law at time t. The k-th draw is a
 * pure function of (seed, stream, k): identical across thread counts. */
itl_status itl_sample(const itl_model* m, double t, uint64_t seed, uint64_t stream, size_t n, double* out);

/* Exact fBm path on the given strictly increasing times (n <= 4096). */
itl_status itl_fbm_path_cholesky(double hurst, const double* times, size_t n, uint64_t seed, uint64_t stream,
                                 double* out_values);
/* Circulant-embedding fGn path: n a power of two <= 2^22, step dt. */
itl_status itl_fbm_path_circulant(double hurst, size_t n, double dt, uint64_t seed, uint64_t stream,
                                  double* out_values);

/* ---- analytics ---------------------------------------------------------- */

/* Even moment of order 2k of the iterated chain H[0..n_hurst). */
itl_status itl_moment_chain(const double* hursts, size_t n_hurst, int k, double t, double* out);
itl_status itl_variance_iterated(double h1, double h2, double t, double* out);
itl_status itl_mellin_chain(double alpha, int n, double hurst, double t, double* out);
itl_status itl_charfn(const itl_model* m, double beta, double t, double* out);

/* ---- verification suites ------------------------------------------------ */

typedef struct itl_report itl_report;

typedef struct itl_run_options {
    const char* tags;        /* comma list or "all" (NULL = "all") */
    size_t n_samples;        /* identity suite (0 = 100000) */
    uint64_t seed;           /* identity suite (0 = 42) */
    double tolerance;        /* pde suite override (0 = registry defaults) */
    int negative_controls;   /* identity suite: run the power checks */
} itl_run_options;

/* Governing-equation residual suite over the registry entries a..o. */
itl_status itl_run_pde_suite(const itl_run_options* opt, itl_report** out);
/* Distributional-identity suite (KS two-sample + CDF variants). */
itl_status itl_run_identity_suite(const itl_run_options* opt, itl_report** out);

size_t itl_report_count(const itl_report* r);
/* One JSON object (no trailing newline) per entry. */
const char* itl_report_json_line(const itl_report* r, size_t i);
/* 0 = pass, 1 = fail, 2 = inconclusive. */
int itl_report_verdict(const itl_report* r, size_t i);
/* Exit-code contract: 0 all pass, 2 any inconclusive, 1 any fail. */
int itl_report_exit_code(const itl_report* r);
/* Per-point residual CSV rows for the PDE suite: "tag,x,t,abs,rel". */
size_t itl_report_csv_count(const itl_report* r);
const char* itl_report_csv_row(const itl_report* r, size_t i);
void itl_report_free(itl_report* r);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* ITERLAB_H */
