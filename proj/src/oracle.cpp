#include "oracle.hpp"
#include "gamma.hpp"

#include <mpfr.h>

#include <cmath>
#include <cstdio>
#include <vector>

namespace mlein {

namespace {

constexpr long kMaxTerms = 1000000;

// Minimal RAII holder for an mpfr real.
struct R {
    mpfr_t v;
    explicit R(mpfr_prec_t p) { mpfr_init2(v, p); mpfr_set_zero(v, 1); }
    R(R &&o) noexcept {
        mpfr_init2(v, mpfr_get_prec(o.v));
        mpfr_swap(v, o.v);
    }
    R(const R &) = delete;
    R &operator=(const R &) = delete;
    ~R() { mpfr_clear(v); }
};

// Per-term coefficients expressed with exact integer multipliers of the
// input parameters.  Every compound quantity (Gamma argument, denominator,
// |z| exponent, prefactor power) is assembled in extended precision from
// alpha/beta/gamma directly: pre-rounding e.g. alpha+beta to double would
// perturb the terms at the 1e-16 level, which the cancellation near the
// series peak amplifies far beyond the oracle's accuracy target.
struct SeriesShape {
    int ea, ec;     // |z| exponent per index: (ea*alpha + ec) * n
    int gan, gac;   // Gamma(alpha*(gan*n + gac) + beta)
    int dan, dac;   // denominator alpha*(dan*n + dac) + dc + dg*gamma
    double dc;
    int dg;
    int pa;         // prefactor z^(pa*alpha + pc)
    double pc;
    bool alternating;
};

SeriesShape shape_for(FnId fn) {
    switch (fn) {
    case FnId::Ein:
        return {1, 0, 1, 1, 1, 0, 1.0, 0, 0, 1.0, true};
    case FnId::Sin:
        return {2, 0, 2, 1, 2, 0, 1.0, 0, 0, 1.0, true};
    case FnId::Cin:
        return {2, 0, 2, 2, 2, 1, 1.0, 0, 1, 1.0, true};
    case FnId::F:
        return {0, 1, 1, 1, 1, 0, 0.0, 1, 0, 0.0, false};
    case FnId::ML:
        return {0, 1, 1, 0, 0, 0, 1.0, 0, 0, 0.0, false};
    }
    throw MleinError(Status::Usage, "oracle: unknown function id");
}

// Pairwise-balanced sum of terms[lo..hi) into out.
void pairwise(const std::vector<R> &terms, size_t lo, size_t hi, mpfr_t out,
              mpfr_prec_t prec) {
    if (hi == lo) {
        mpfr_set_zero(out, 1);
        return;
    }
    if (hi - lo == 1) {
        mpfr_set(out, terms[lo].v, MPFR_RNDN);
        return;
    }
    size_t mid = lo + (hi - lo) / 2;
    R a(prec), b(prec);
    pairwise(terms, lo, mid, a.v, prec);
    pairwise(terms, mid, hi, b.v, prec);
    mpfr_add(out, a.v, b.v, MPFR_RNDN);
}

struct OracleCore {
    mpfr_prec_t prec;
    R re, im;
    OracleResult meta;
    OracleCore(mpfr_prec_t p) : prec(p), re(p), im(p) {}
};

void oracle_core(FnId fn, double alpha, double beta, double gamma_param,
                 Polar z, int digits, OracleCore &out) {
    if (!(alpha > 0.0))
        throw MleinError(Status::Domain, "alpha must be positive");
    if (!(digits >= 30))
        throw MleinError(Status::Usage, "oracle digits must be >= 30");
    if (!std::isfinite(z.mod) || z.mod < 0.0 || !std::isfinite(z.arg))
        throw MleinError(Status::Usage, "invalid argument z");

    const mpfr_prec_t prec = out.prec;
    SeriesShape sh = shape_for(fn);

    // Exact extended-precision copies of the parameters.
    R A(prec), B(prec), G(prec), E(prec);
    mpfr_set_d(A.v, alpha, MPFR_RNDN);
    mpfr_set_d(B.v, beta, MPFR_RNDN);
    mpfr_set_d(G.v, gamma_param, MPFR_RNDN);
    // |z| exponent coefficient ea*alpha + ec.
    mpfr_mul_si(E.v, A.v, sh.ea, MPFR_RNDN);
    mpfr_add_si(E.v, E.v, sh.ec, MPFR_RNDN);

    if (z.mod == 0.0) {
        // Ein/Sin/Cin vanish at 0; ML/F reduce to their n=0 term.
        mpfr_set_zero(out.re.v, 1);
        mpfr_set_zero(out.im.v, 1);
        if (fn == FnId::ML || fn == FnId::F) {
            R g(prec), d(prec);
            mpfr_mul_si(g.v, A.v, sh.gac, MPFR_RNDN);
            mpfr_add(g.v, g.v, B.v, MPFR_RNDN);
            mpfr_gamma(g.v, g.v, MPFR_RNDN);
            mpfr_mul_si(d.v, A.v, sh.dac, MPFR_RNDN);
            mpfr_add_d(d.v, d.v, sh.dc, MPFR_RNDN);
            if (sh.dg != 0) {
                R gg(prec);
                mpfr_mul_si(gg.v, G.v, sh.dg, MPFR_RNDN);
                mpfr_add(d.v, d.v, gg.v, MPFR_RNDN);
            }
            mpfr_mul(g.v, g.v, d.v, MPFR_RNDN);
            mpfr_d_div(out.re.v, 1.0, g.v, MPFR_RNDN);
        }
        out.meta.terms_used = 1;
        return;
    }

    R lmod(prec);
    mpfr_set_d(lmod.v, z.mod, MPFR_RNDN);
    mpfr_log(lmod.v, lmod.v, MPFR_RNDN);

    std::vector<R> terms_re, terms_im;
    R sum_re(prec), sum_im(prec);
    R max_mag(prec), t_re(prec), t_im(prec);
    R ga(prec), mag(prec), ang(prec), c(prec), s(prec), tmp(prec), thr(prec);

    R den(out.prec);
    int small_run = 0;
    long n = 0;
    for (; n < kMaxTerms; ++n) {
        // Gamma argument alpha*(gan*n + gac) + beta.
        mpfr_mul_si(ga.v, A.v, sh.gan * n + sh.gac, MPFR_RNDN);
        mpfr_add(ga.v, ga.v, B.v, MPFR_RNDN);
        bool pole = mpfr_integer_p(ga.v) && mpfr_sgn(ga.v) <= 0;

        // Denominator alpha*(dan*n + dac) + dc + dg*gamma.
        mpfr_mul_si(den.v, A.v, sh.dan * n + sh.dac, MPFR_RNDN);
        mpfr_add_d(den.v, den.v, sh.dc, MPFR_RNDN);
        if (sh.dg != 0) {
            mpfr_mul_si(tmp.v, G.v, sh.dg, MPFR_RNDN);
            mpfr_add(den.v, den.v, tmp.v, MPFR_RNDN);
        }
        if (pole || mpfr_sgn(den.v) == 0) {
            mpfr_set_zero(t_re.v, 1);
            mpfr_set_zero(t_im.v, 1);
            mpfr_set_zero(mag.v, 1);
        } else {
            // magnitude part exp(e*n*lmod) / (|den| * |Gamma(ga)|)
            mpfr_mul_si(mag.v, E.v, n, MPFR_RNDN);
            mpfr_mul(mag.v, mag.v, lmod.v, MPFR_RNDN);
            mpfr_exp(mag.v, mag.v, MPFR_RNDN);
            mpfr_gamma(tmp.v, ga.v, MPFR_RNDN);
            mpfr_div(mag.v, mag.v, tmp.v, MPFR_RNDN);
            mpfr_div(mag.v, mag.v, den.v, MPFR_RNDN);
            if (sh.alternating && (n % 2 != 0))
                mpfr_neg(mag.v, mag.v, MPFR_RNDN);
            // phase n * e * arg
            mpfr_mul_d(ang.v, E.v, z.arg, MPFR_RNDN);
            mpfr_mul_si(ang.v, ang.v, n, MPFR_RNDN);
            mpfr_sin_cos(s.v, c.v, ang.v, MPFR_RNDN);
            mpfr_mul(t_re.v, mag.v, c.v, MPFR_RNDN);
            mpfr_mul(t_im.v, mag.v, s.v, MPFR_RNDN);
            mpfr_abs(mag.v, mag.v, MPFR_RNDN);
        }

        mpfr_add(sum_re.v, sum_re.v, t_re.v, MPFR_RNDN);
        mpfr_add(sum_im.v, sum_im.v, t_im.v, MPFR_RNDN);
        {
            R cp_re(prec), cp_im(prec);
            mpfr_set(cp_re.v, t_re.v, MPFR_RNDN);
            mpfr_set(cp_im.v, t_im.v, MPFR_RNDN);
            terms_re.push_back(std::move(cp_re));
            terms_im.push_back(std::move(cp_im));
        }
        if (mpfr_cmp(mag.v, max_mag.v) > 0)
            mpfr_set(max_mag.v, mag.v, MPFR_RNDN);

        // stopping rule: three consecutive terms below rel threshold
        mpfr_hypot(thr.v, sum_re.v, sum_im.v, MPFR_RNDN);
        R floor_(prec);
        mpfr_set_d(floor_.v, 10.0, MPFR_RNDN);
        mpfr_pow_si(floor_.v, floor_.v, -(digits + 10), MPFR_RNDN);
        mpfr_mul(floor_.v, floor_.v, thr.v, MPFR_RNDN);
        if (mpfr_cmp_d(floor_.v, 1e-300) < 0)
            mpfr_set_d(floor_.v, 1e-300, MPFR_RNDN);
        if (n >= 1 && mpfr_cmp(mag.v, floor_.v) < 0) {
            if (++small_run >= 3)
                break;
        } else {
            small_run = 0;
        }
    }
    if (n >= kMaxTerms)
        throw MleinError(Status::Convergence,
                         "oracle series did not converge within 1e6 terms");
    out.meta.terms_used = static_cast<int>(n + 1);

    // Independent summation order check (pairwise vs forward).
    R p_re(prec), p_im(prec);
    pairwise(terms_re, 0, terms_re.size(), p_re.v, prec);
    pairwise(terms_im, 0, terms_im.size(), p_im.v, prec);
    {
        R d1(prec), d2(prec), norm(prec);
        mpfr_sub(d1.v, p_re.v, sum_re.v, MPFR_RNDN);
        mpfr_sub(d2.v, p_im.v, sum_im.v, MPFR_RNDN);
        mpfr_hypot(d1.v, d1.v, d2.v, MPFR_RNDN);
        mpfr_hypot(norm.v, sum_re.v, sum_im.v, MPFR_RNDN);
        mpfr_mul_d(norm.v, norm.v, 1e-25, MPFR_RNDN);
        mpfr_add_d(norm.v, norm.v, 1e-300, MPFR_RNDN);
        if (mpfr_cmp(d1.v, norm.v) > 0)
            throw MleinError(Status::Precision,
                             "oracle: summation orders disagree beyond "
                             "25-digit tolerance");
    }

    // Cancellation budget.
    {
        R norm(prec);
        mpfr_hypot(norm.v, sum_re.v, sum_im.v, MPFR_RNDN);
        double canc = 0.0;
        if (mpfr_sgn(norm.v) != 0 && mpfr_sgn(max_mag.v) != 0) {
            R ratio(prec);
            mpfr_div(ratio.v, max_mag.v, norm.v, MPFR_RNDN);
            mpfr_log10(ratio.v, ratio.v, MPFR_RNDN);
            canc = mpfr_get_d(ratio.v, MPFR_RNDN);
        }
        out.meta.cancellation_digits = canc;
        if (static_cast<double>(digits) - canc < 25.0)
            throw MleinError(Status::Precision,
                             "oracle: cancellation exceeds precision budget; "
                             "raise MLEIN_PRECISION_DIGITS");
    }

    // Prefactor z^(pa*alpha + pc).
    if (sh.pa != 0 || sh.pc != 0.0) {
        R p(prec), pm(prec), pcs(prec), ps(prec);
        mpfr_mul_si(p.v, A.v, sh.pa, MPFR_RNDN);
        mpfr_add_d(p.v, p.v, sh.pc, MPFR_RNDN);
        mpfr_mul(pm.v, lmod.v, p.v, MPFR_RNDN);
        mpfr_exp(pm.v, pm.v, MPFR_RNDN);
        mpfr_mul_d(tmp.v, p.v, z.arg, MPFR_RNDN);
        mpfr_sin_cos(ps.v, pcs.v, tmp.v, MPFR_RNDN);
        mpfr_mul(pcs.v, pcs.v, pm.v, MPFR_RNDN);
        mpfr_mul(ps.v, ps.v, pm.v, MPFR_RNDN);
        R r2(prec), i2(prec);
        mpfr_mul(r2.v, sum_re.v, pcs.v, MPFR_RNDN);
        mpfr_mul(tmp.v, sum_im.v, ps.v, MPFR_RNDN);
        mpfr_sub(r2.v, r2.v, tmp.v, MPFR_RNDN);
        mpfr_mul(i2.v, sum_re.v, ps.v, MPFR_RNDN);
        mpfr_mul(tmp.v, sum_im.v, pcs.v, MPFR_RNDN);
        mpfr_add(i2.v, i2.v, tmp.v, MPFR_RNDN);
        mpfr_set(sum_re.v, r2.v, MPFR_RNDN);
        mpfr_set(sum_im.v, i2.v, MPFR_RNDN);
    }

    mpfr_set(out.re.v, sum_re.v, MPFR_RNDN);
    mpfr_set(out.im.v, sum_im.v, MPFR_RNDN);
}

mpfr_prec_t prec_for(int digits) {
    return static_cast<mpfr_prec_t>(
        std::ceil(digits * 3.3219280948873623) + 96);
}

std::string fmt30(mpfr_t v) {
    char buf[64];
    mpfr_snprintf(buf, sizeof(buf), "%.29Re", v);
    return std::string(buf);
}

} // namespace

OracleResult oracle_eval(FnId fn, double alpha, double beta,
                         double gamma_param, Polar z, int digits) {
    OracleCore core(prec_for(digits));
    oracle_core(fn, alpha, beta, gamma_param, z, digits, core);
    OracleResult out = core.meta;
    out.value = cplx(mpfr_get_d(core.re.v, MPFR_RNDN),
                     mpfr_get_d(core.im.v, MPFR_RNDN));
    out.re_str = fmt30(core.re.v);
    out.im_str = fmt30(core.im.v);
    return out;
}

double oracle_rel_err(FnId fn, double alpha, double beta, double gamma_param,
                      Polar z, cplx approx, int digits) {
    OracleCore core(prec_for(digits));
    oracle_core(fn, alpha, beta, gamma_param, z, digits, core);
    const mpfr_prec_t prec = core.prec;
    R dre(prec), dim(prec), norm(prec);
    mpfr_sub_d(dre.v, core.re.v, approx.real(), MPFR_RNDN);
    mpfr_sub_d(dim.v, core.im.v, approx.imag(), MPFR_RNDN);
    mpfr_hypot(dre.v, dre.v, dim.v, MPFR_RNDN);
    mpfr_hypot(norm.v, core.re.v, core.im.v, MPFR_RNDN);
    if (mpfr_sgn(norm.v) == 0)
        throw MleinError(Status::Domain,
                         "oracle value is zero; relative error undefined");
    mpfr_div(dre.v, dre.v, norm.v, MPFR_RNDN);
    return mpfr_get_d(dre.v, MPFR_RNDN);
}

} // namespace mlein
