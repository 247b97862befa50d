#include "mlein/mlein.h"

#include "asym.hpp"
#include "common.hpp"
#include "oracle.hpp"
#include "series.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <string>

using namespace mlein;

struct mlein_ctx {
    int digits = 50;
    double rel_tol = 1e-15;
    bool stokes = false;
    int max_alg_terms = 200;
    double gamma_param = 1.0;
};

namespace {

int env_digits() {
    const char *s = std::getenv("MLEIN_PRECISION_DIGITS");
    if (!s || !*s)
        return 50;
    char *end = nullptr;
    long v = std::strtol(s, &end, 10);
    if (end == s || *end != '\0' || v < 30 || v > 10000)
        return 50;
    return static_cast<int>(v);
}

FnId to_fnid(int fn) {
    switch (fn) {
    case MLEIN_FN_EIN: return FnId::Ein;
    case MLEIN_FN_SIN: return FnId::Sin;
    case MLEIN_FN_CIN: return FnId::Cin;
    case MLEIN_FN_F: return FnId::F;
    case MLEIN_FN_ML: return FnId::ML;
    }
    throw MleinError(Status::Usage, "unknown function id");
}

AsymOptions opts_from(const mlein_ctx *ctx) {
    AsymOptions o;
    o.stokes = ctx->stokes;
    o.max_alg_terms = ctx->max_alg_terms;
    return o;
}

int run(const std::function<void()> &body) {
    try {
        body();
        return MLEIN_OK;
    } catch (const MleinError &e) {
        return static_cast<int>(e.status);
    } catch (...) {
        return MLEIN_ERR_USAGE;
    }
}

TruncatedSum series_dispatch(const mlein_ctx *ctx, FnId fn, double alpha,
                             double beta, Polar z) {
    switch (fn) {
    case FnId::Ein: return ein_series(alpha, beta, z, ctx->rel_tol);
    case FnId::Sin: return sin_series(alpha, beta, z, ctx->rel_tol);
    case FnId::Cin: return cin_series(alpha, beta, z, ctx->rel_tol);
    case FnId::ML: return mittag_leffler(alpha, beta, z, ctx->rel_tol);
    case FnId::F:
        return f_series(alpha, beta, ctx->gamma_param, z, ctx->rel_tol);
    }
    throw MleinError(Status::Usage, "unknown function id");
}

AsymResult asym_dispatch(const mlein_ctx *ctx, FnId fn, double alpha,
                         double beta, Polar z) {
    AsymOptions o = opts_from(ctx);
    switch (fn) {
    case FnId::Ein: return ein_asymptotic(alpha, beta, z, o);
    case FnId::Sin: return sin_asymptotic(alpha, beta, z, o);
    case FnId::Cin: return cin_asymptotic(alpha, beta, z, o);
    case FnId::F:
        return f_chi_asymptotic(alpha, beta, ctx->gamma_param, z, o);
    case FnId::ML:
        throw MleinError(Status::Usage,
                         "asymptotic mode is not provided for the bare "
                         "Mittag-Leffler function");
    }
    throw MleinError(Status::Usage, "unknown function id");
}

void fill_report_asym(mlein_report *rep, const AsymResult &r) {
    rep->asym_value = {r.value.real(), r.value.imag()};
    rep->branch = static_cast<int>(r.branch);
    rep->n_trunc = 0;
    for (std::size_t i = 0; i < r.trunc_indices.size() &&
                            i < MLEIN_MAX_TRUNC; ++i)
        rep->trunc_indices[rep->n_trunc++] = r.trunc_indices[i];
    for (const auto &w : r.warnings) {
        if (rep->n_warnings >= MLEIN_MAX_WARNINGS)
            break;
        std::snprintf(rep->warnings[rep->n_warnings++], MLEIN_WARNING_LEN,
                      "%s", w.c_str());
    }
}

void clear_report(mlein_report *rep) {
    std::memset(rep, 0, sizeof(*rep));
    rep->abs_rel_error = -1.0;
}

} // namespace

extern "C" {

mlein_ctx *mlein_ctx_new(void) {
    auto *ctx = new (std::nothrow) mlein_ctx();
    if (ctx)
        ctx->digits = env_digits();
    return ctx;
}

void mlein_ctx_free(mlein_ctx *ctx) { delete ctx; }

int mlein_ctx_set_precision_digits(mlein_ctx *ctx, int digits) {
    if (!ctx || digits < 30 || digits > 10000)
        return MLEIN_ERR_USAGE;
    ctx->digits = digits;
    return MLEIN_OK;
}

int mlein_ctx_set_rel_tol(mlein_ctx *ctx, double rel_tol) {
    if (!ctx || !(rel_tol >= 1e-30 && rel_tol <= 1e-6))
        return MLEIN_ERR_USAGE;
    ctx->rel_tol = rel_tol;
    return MLEIN_OK;
}

int mlein_ctx_set_stokes(mlein_ctx *ctx, int enabled) {
    if (!ctx)
        return MLEIN_ERR_USAGE;
    ctx->stokes = enabled != 0;
    return MLEIN_OK;
}

int mlein_ctx_set_max_alg_terms(mlein_ctx *ctx, int max_terms) {
    if (!ctx || max_terms < 1 || max_terms > 200)
        return MLEIN_ERR_USAGE;
    ctx->max_alg_terms = max_terms;
    return MLEIN_OK;
}

int mlein_ctx_set_gamma_param(mlein_ctx *ctx, double gamma_param) {
    if (!ctx || !(gamma_param > 0.0))
        return MLEIN_ERR_USAGE;
    ctx->gamma_param = gamma_param;
    return MLEIN_OK;
}

int mlein_series_eval(mlein_ctx *ctx, int fn, double alpha, double beta,
                      double z_mod, double z_arg, mlein_complex *out,
                      int *terms_used, double *omitted_magnitude) {
    if (!ctx || !out)
        return MLEIN_ERR_USAGE;
    return run([&] {
        TruncatedSum s =
            series_dispatch(ctx, to_fnid(fn), alpha, beta, {z_mod, z_arg});
        *out = {s.value.real(), s.value.imag()};
        if (terms_used)
            *terms_used = s.terms_used;
        if (omitted_magnitude)
            *omitted_magnitude = s.omitted_magnitude;
    });
}

int mlein_asym_eval(mlein_ctx *ctx, int fn, double alpha, double beta,
                    double z_mod, double z_arg, mlein_complex *out,
                    mlein_report *report_or_null) {
    if (!ctx || !out)
        return MLEIN_ERR_USAGE;
    return run([&] {
        AsymResult r =
            asym_dispatch(ctx, to_fnid(fn), alpha, beta, {z_mod, z_arg});
        *out = {r.value.real(), r.value.imag()};
        if (report_or_null) {
            clear_report(report_or_null);
            fill_report_asym(report_or_null, r);
        }
    });
}

int mlein_oracle_eval(mlein_ctx *ctx, int fn, double alpha, double beta,
                      double z_mod, double z_arg, mlein_complex *out,
                      char *str_re, char *str_im, size_t str_cap) {
    if (!ctx || !out)
        return MLEIN_ERR_USAGE;
    return run([&] {
        OracleResult r = oracle_eval(to_fnid(fn), alpha, beta,
                                     ctx->gamma_param, {z_mod, z_arg},
                                     ctx->digits);
        *out = {r.value.real(), r.value.imag()};
        if (str_re && str_cap > 0)
            std::snprintf(str_re, str_cap, "%s", r.re_str.c_str());
        if (str_im && str_cap > 0)
            std::snprintf(str_im, str_cap, "%s", r.im_str.c_str());
    });
}

int mlein_eval_report(mlein_ctx *ctx, int fn, double alpha, double beta,
                      double z_mod, double z_arg, int method,
                      mlein_report *report) {
    if (!ctx || !report || method < 0 || method > 2)
        return MLEIN_ERR_USAGE;
    return run([&] {
        clear_report(report);
        FnId id = to_fnid(fn);
        Polar z{z_mod, z_arg};
        cplx sv(0.0, 0.0);
        if (method == 0 || method == 2) {
            TruncatedSum s = series_dispatch(ctx, id, alpha, beta, z);
            sv = s.value;
            report->series_value = {sv.real(), sv.imag()};
            if (method == 0) {
                report->trunc_indices[0] = s.terms_used;
                report->n_trunc = 1;
            }
        }
        if (method == 1 || method == 2) {
            AsymResult r = asym_dispatch(ctx, id, alpha, beta, z);
            fill_report_asym(report, r);
        }
        if (method == 2 && std::abs(sv) > 0.0) {
            cplx av(report->asym_value.re, report->asym_value.im);
            report->abs_rel_error = std::abs(av - sv) / std::abs(sv);
        }
    });
}

int mlein_asym_vs_oracle(mlein_ctx *ctx, int fn, double alpha, double beta,
                         double z_mod, double z_arg, double *rel_err,
                         mlein_report *report_or_null) {
    if (!ctx || !rel_err)
        return MLEIN_ERR_USAGE;
    return run([&] {
        FnId id = to_fnid(fn);
        Polar z{z_mod, z_arg};
        AsymResult r = asym_dispatch(ctx, id, alpha, beta, z);
        *rel_err = oracle_rel_err(id, alpha, beta, ctx->gamma_param, z,
                                  r.value, ctx->digits);
        if (report_or_null) {
            clear_report(report_or_null);
            fill_report_asym(report_or_null, r);
            report_or_null->abs_rel_error = *rel_err;
        }
    });
}

int mlein_asym_leading(mlein_ctx *ctx, int fn, double alpha, double beta,
                       double z_mod, double z_arg, mlein_complex *out) {
    if (!ctx || !out)
        return MLEIN_ERR_USAGE;
    return run([&] {
        cplx v = asym_leading(to_fnid(fn), alpha, beta, {z_mod, z_arg});
        *out = {v.real(), v.imag()};
    });
}

const char *mlein_strerror(int code) {
    switch (code) {
    case MLEIN_OK: return "success";
    case MLEIN_ERR_USAGE: return "usage error";
    case MLEIN_ERR_DOMAIN: return "numeric domain error";
    case MLEIN_ERR_CONVERGE: return "convergence failure";
    case MLEIN_ERR_PRECISION: return "precision budget exceeded";
    }
    return "unknown error";
}

const char *mlein_branch_name(int branch) {
    return branch_name(static_cast<Branch>(branch));
}

const char *mlein_version(void) { return "1.0.0"; }

} // extern "C"
