/* mlein — generalized complementary exponential, sine and cosine integrals
 *
 * C interface to the mlein evaluation library.  All functions are
 * thread-safe; a context holds configuration only and may be shared
 * across threads for read-only use.
 */
#ifndef MLEIN_H
#define MLEIN_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

/* ---- status codes (match the CLI exit codes where applicable) ---- */
enum {
    MLEIN_OK            = 0,
    MLEIN_ERR_USAGE     = 2,  /* bad argument / unsupported combination */
    MLEIN_ERR_DOMAIN    = 3,  /* numeric domain error (pole, sector violation) */
    MLEIN_ERR_CONVERGE  = 4,  /* series failed to converge within term budget */
    MLEIN_ERR_PRECISION = 5   /* oracle cancellation exceeds precision budget */
};

/* ---- function ids ---- */
enum {
    MLEIN_FN_EIN = 0,   /* Ein_{alpha,beta}(z) */
    MLEIN_FN_SIN = 1,   /* Sin_{alpha,beta}(z) */
    MLEIN_FN_CIN = 2,   /* Cin_{alpha,beta}(z) */
    MLEIN_FN_F   = 3,   /* related function F(chi), general gamma_param */
    MLEIN_FN_ML  = 4    /* two-parameter Mittag-Leffler E_{alpha,beta}(z) */
};

/* ---- asymptotic branch taken ---- */
enum {
    MLEIN_BR_ALGEBRAIC  = 0,
    MLEIN_BR_ALG_EXP    = 1,  /* algebraic + exponential */
    MLEIN_BR_LOG_CASE   = 2,
    MLEIN_BR_ALPHA2     = 3,
    MLEIN_BR_STOKES     = 4   /* Stokes-corrected */
};

typedef struct mlein_ctx mlein_ctx;

typedef struct {
    double re;
    double im;
} mlein_complex;

#define MLEIN_MAX_TRUNC    4
#define MLEIN_MAX_WARNINGS 4
#define MLEIN_WARNING_LEN  160

/* Mirrors the EvalReport domain type. */
typedef struct {
    mlein_complex series_value;   /* set when method includes series */
    mlein_complex asym_value;     /* set when method includes asym   */
    double abs_rel_error;         /* |asym - reference| / |reference|; -1 if not computed */
    int branch;                   /* MLEIN_BR_* */
    int trunc_indices[MLEIN_MAX_TRUNC];
    int n_trunc;
    char warnings[MLEIN_MAX_WARNINGS][MLEIN_WARNING_LEN];
    int n_warnings;
} mlein_report;

/* ---- context ---- */

/* Creates a context. Oracle precision defaults to the environment variable
 * MLEIN_PRECISION_DIGITS if set, else 50 decimal digits. */
mlein_ctx *mlein_ctx_new(void);
void mlein_ctx_free(mlein_ctx *ctx);

int mlein_ctx_set_precision_digits(mlein_ctx *ctx, int digits);       /* >= 30 */
int mlein_ctx_set_rel_tol(mlein_ctx *ctx, double rel_tol);            /* [1e-30, 1e-6] */
int mlein_ctx_set_stokes(mlein_ctx *ctx, int enabled);
int mlein_ctx_set_max_alg_terms(mlein_ctx *ctx, int max_terms);       /* 1..200 */
int mlein_ctx_set_gamma_param(mlein_ctx *ctx, double gamma_param);    /* for MLEIN_FN_F */

/* ---- evaluation ----
 * z is passed in polar form (modulus, argument in radians); the argument
 * convention is the principal branch with the negative real axis closed
 * from above (arg z = +pi). */

/* Convergent series (ground truth at working precision). */
int mlein_series_eval(mlein_ctx *ctx, int fn, double alpha, double beta,
                      double z_mod, double z_arg,
                      mlein_complex *out, int *terms_used, double *omitted_magnitude);

/* Large-|z| asymptotic expansion per the dispatch theorems. */
int mlein_asym_eval(mlein_ctx *ctx, int fn, double alpha, double beta,
                    double z_mod, double z_arg,
                    mlein_complex *out, mlein_report *report_or_null);

/* Extended-precision oracle (>= 25 correct digits at default settings).
 * out receives the rounded double value; if str_re/str_im are non-NULL
 * they receive 30-significant-digit decimal strings. */
int mlein_oracle_eval(mlein_ctx *ctx, int fn, double alpha, double beta,
                      double z_mod, double z_arg,
                      mlein_complex *out,
                      char *str_re, char *str_im, size_t str_cap);

/* Full report: method 0 = series, 1 = asym, 2 = both.  With method 2 the
 * abs_rel_error field is |asym - series| / |series| (the EvalReport
 * invariant); use mlein_asym_vs_oracle for comparisons against the
 * extended-precision reference. */
int mlein_eval_report(mlein_ctx *ctx, int fn, double alpha, double beta,
                      double z_mod, double z_arg, int method,
                      mlein_report *report);

/* Asymptotic value compared against the extended-precision oracle:
 * rel_err = |asym - oracle| / |oracle| computed in extended precision
 * (this is how the table harness evaluates cells). */
int mlein_asym_vs_oracle(mlein_ctx *ctx, int fn, double alpha, double beta,
                         double z_mod, double z_arg, double *rel_err,
                         mlein_report *report_or_null);

/* Leading-order asymptotic approximation (constant/log part plus the
 * first algebraic term): the dashed curves of the figures.  Valid for
 * any |z| > 0. */
int mlein_asym_leading(mlein_ctx *ctx, int fn, double alpha, double beta,
                       double z_mod, double z_arg, mlein_complex *out);

const char *mlein_strerror(int code);
const char *mlein_branch_name(int branch);
const char *mlein_version(void);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* MLEIN_H */
