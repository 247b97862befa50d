#include "asym.hpp"
#include "gamma.hpp"

#include <algorithm>
#include <cmath>

namespace mlein {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kGrowthCutoff = 1e10;

cplx cis(double a) { return cplx(std::cos(a), std::sin(a)); }

// ---- algebraic expansion H (z-combined form, generic gamma) ----
// value contribution = c0 + sum_k (-)^k z^{g-a(k+1)} / ((g-a(k+1)) G(be-ak))
// with the double-pole log branch when a*m == g.

struct HTerms {
    cplx c0{0.0, 0.0};
    std::vector<cplx> terms;
    std::vector<double> mags;
    std::vector<int> kidx;
    bool log_case = false;
    int m = 0;
    bool near_log = false;
};

HTerms gen_H(double a, double g, double be, double lmod, double th,
             int max_terms) {
    HTerms H;
    // Log-case detection: a within 1e-10 of g/m for some m <= 200.
    for (int m = 1; m <= 200; ++m) {
        double diff = std::abs(a - g / static_cast<double>(m));
        if (diff < 1e-10) {
            H.log_case = true;
            H.m = m;
            break;
        }
        if (diff < 1e-6)
            H.near_log = true;
    }
    cplx Lz(lmod, th);
    double c_arg = a + be - g;
    if (H.log_case) {
        double rg = recip_gamma(c_arg);
        if (rg != 0.0) {
            double psi = digamma(c_arg); // paper-backed ranges have c_arg > 0
            double sgn = (H.m % 2 == 0) ? -1.0 : 1.0;
            H.c0 = sgn * rg *
                   ((static_cast<double>(H.m) / g) * a * Lz - psi);
        }
    } else {
        double s = sin_pi(g / a);
        if (std::abs(s) < 1e-12)
            throw MleinError(Status::Domain,
                             "degenerate parameters: sin(pi gamma/alpha) "
                             "vanishes outside the log case");
        H.c0 = cplx((kPi / a) * recip_gamma(c_arg) / s, 0.0);
    }
    double minlog = 1e300;
    for (int k = 0; k < max_terms; ++k) {
        if (H.log_case && k == H.m - 1)
            continue;
        double d = g - a * (k + 1);
        if (std::abs(d) < 1e-12)
            continue; // coalescent exponent; handled by the log branch
        double rg = recip_gamma(be - a * k);
        if (rg == 0.0)
            continue; // Gamma pole: term exactly zero
        double logmag = d * lmod + std::log(std::abs(rg)) -
                        std::log(std::abs(d));
        if (logmag > 600.0)
            break;
        double mag = std::exp(logmag);
        double sgn = (k % 2 != 0) ? -1.0 : 1.0;
        H.terms.push_back(sgn * std::exp(d * lmod) * cis(d * th) * rg / d);
        H.mags.push_back(mag);
        H.kidx.push_back(k);
        if (logmag < minlog)
            minlog = logmag;
        else if (logmag > minlog + std::log(kGrowthCutoff))
            break; // far past the least term; rest is divergent growth
    }
    return H;
}

// ---- exponential expansion: pref * sum_j c_j exp(-j*wl) where
// wl = log|z| + i*phase (analytic continuation: phase is NOT re-wrapped),
// pref = exp((-a-be)*wl)/a * exp(exp(wl)), c_j = (a+be-g)_j.

struct ETerms {
    cplx pref{0.0, 0.0};
    std::vector<cplx> terms;
    std::vector<double> mags;
};

ETerms gen_E(double a, double be, double g, double lmod, double phase,
             int max_terms) {
    ETerms E;
    cplx wl(lmod, phase);
    double re_w = std::exp(lmod) * std::cos(phase);
    if (re_w > 700.0)
        throw MleinError(Status::Domain,
                         "exponential expansion overflows double range "
                         "(Re(e^{-pi i/alpha} z) > 700)");
    E.pref = std::exp((-a - be) * wl) / a * std::exp(std::exp(wl));
    double c = 1.0;
    double minmag = 1e300;
    for (int j = 0; j < max_terms; ++j) {
        double mag = std::abs(c) * std::exp(-j * lmod);
        if (mag < 1e-320)
            break;
        E.terms.push_back(c * std::exp(-static_cast<double>(j) * wl));
        E.mags.push_back(mag);
        if (mag < minmag)
            minmag = mag;
        else if (mag > minmag * kGrowthCutoff)
            break;
        c *= a + be - g + static_cast<double>(j);
        if (c == 0.0)
            break; // series terminates
    }
    return E;
}

struct TruncPick {
    cplx sum{0.0, 0.0};
    int count = 0;
    double omitted = 0.0;
};

TruncPick pick(const std::vector<cplx> &terms, const std::vector<double> &mags,
               int offset) {
    TruncPick p;
    if (terms.empty())
        return p;
    std::size_t idx = optimal_truncate(mags);
    long n = static_cast<long>(idx) + 1 + offset;
    n = std::clamp(n, 0L, static_cast<long>(terms.size()));
    for (long i = 0; i < n; ++i)
        p.sum += terms[static_cast<std::size_t>(i)];
    p.count = static_cast<int>(n);
    if (static_cast<std::size_t>(n) < mags.size())
        p.omitted = mags[static_cast<std::size_t>(n)];
    return p;
}

void check_opts(const AsymOptions &opt) {
    if (opt.max_alg_terms < 1 || opt.max_alg_terms > 200)
        throw MleinError(Status::Usage, "max_alg_terms must be in 1..200");
    if (opt.max_exp_terms < 1 || opt.max_exp_terms > 100)
        throw MleinError(Status::Usage, "max_exp_terms must be in 1..100");
}

// Generic engine for value = z^g * H(z-form) [+ z^g * E-parts] with the
// a == 2 three-term variant.  th is the (possibly continued) phase of z;
// for the Theorem-1 wrappers th lies in [0, pi].
AsymResult asym_core(double a, double g, double be, double lmod, double th,
                     const AsymOptions &opt) {
    check_opts(opt);
    AsymResult res;
    bool a_is_2 = std::abs(a - 2.0) < 1e-12;

    if (a_is_2 && th > kPi / 2.0 + 1e-12) {
        // Evaluate in the right half sector and reflect:
        // f(z) = e^{i pi g} conj(f(|z| e^{i(pi - th)})) for the even/odd
        // z^g * (series in z^2) structure.
        AsymResult inner = asym_core(a, g, be, lmod, kPi - th, opt);
        inner.value = cis(kPi * g) * std::conj(inner.value);
        return inner;
    }

    HTerms H = gen_H(a, g, be, lmod, th, opt.max_alg_terms);
    if (H.near_log)
        res.warnings.push_back(
            "alpha within (1e-10,1e-6) of a log-case value: regular branch "
            "is cancellation-limited");
    TruncPick hp = pick(H.terms, H.mags, opt.d_alg);
    cplx hsum = H.c0 + hp.sum;
    res.trunc_indices.push_back(hp.count);
    res.omitted_magnitude = hp.omitted;

    cplx zg = std::exp(g * lmod) * cis(g * th);

    if (a_is_2) {
        ETerms e1 = gen_E(a, be, g, lmod, th - kPi / 2.0, opt.max_exp_terms);
        TruncPick p1 = pick(e1.terms, e1.mags, opt.d_exp);
        res.trunc_indices.push_back(p1.count);
        if (std::abs(th) < 1e-14) {
            // Real axis: the two conjugate exponential expansions combine
            // into the real cosine form of Theorem 2.
            double osc = 2.0 * (zg * e1.pref * p1.sum).real();
            res.value = cplx(hsum.real() + osc, 0.0);
        } else {
            ETerms e2 =
                gen_E(a, be, g, lmod, th + kPi / 2.0, opt.max_exp_terms);
            TruncPick p2 = pick(e2.terms, e2.mags, opt.d_exp);
            res.value = hsum + zg * (e1.pref * p1.sum + e2.pref * p2.sum);
        }
        res.branch = Branch::Alpha2;
        return res;
    }

    double theta0 = kPi * (2.0 - a) / (2.0 * a);
    bool include_E = th >= theta0 - 1e-12;
    bool stokes_add = false;
    if (!include_E && opt.stokes) {
        if (th > 1e-14) {
            stokes_add = true; // subdominant exponential at full weight
        } else {
            res.warnings.push_back(
                "--stokes on the real axis is only defined for alpha = 1 "
                "(Eq. 3.10 route); flag ignored");
        }
    }
    res.branch = H.log_case ? Branch::LogCase : Branch::Algebraic;
    if (include_E || stokes_add) {
        ETerms E = gen_E(a, be, g, lmod, th - kPi / a, opt.max_exp_terms);
        TruncPick ep = pick(E.terms, E.mags, opt.d_exp);
        res.trunc_indices.push_back(ep.count);
        res.value = hsum + zg * E.pref * ep.sum;
        if (stokes_add)
            res.branch = Branch::StokesCorrected;
        else {
            if (H.log_case)
                res.warnings.push_back(
                    "log-case algebraic part combined with exponential "
                    "expansion");
            res.branch = Branch::AlgebraicExponential;
        }
    } else {
        res.value = hsum;
    }
    return res;
}

void validate_z(Polar z, double min_mod) {
    if (!std::isfinite(z.mod) || !std::isfinite(z.arg))
        throw MleinError(Status::Usage, "invalid argument z");
    if (std::abs(z.arg) > kPi + 1e-12)
        throw MleinError(Status::Usage, "|arg z| must not exceed pi");
    if (!(z.mod >= min_mod))
        throw MleinError(Status::Domain,
                         "|z| below asymptotic validity threshold");
}

} // namespace

SectorClass classify_sector(double alpha, double arg_z) {
    if (!(alpha > 0.0 && alpha <= 2.0 + 1e-12))
        throw MleinError(Status::Domain, "alpha must lie in (0, 2]");
    SectorClass sc;
    sc.theta0 = kPi * (2.0 - alpha) / (2.0 * alpha);
    if (std::abs(alpha - 2.0) < 1e-12)
        sc.regime = SectorClass::Regime::AlphaEquals2;
    else if (alpha < 2.0 / 3.0)
        sc.regime = SectorClass::Regime::SubTwoThirds;
    else if (arg_z < sc.theta0 - 1e-12)
        sc.regime = SectorClass::Regime::AlgebraicOnly;
    else
        sc.regime = SectorClass::Regime::AlgebraicPlusExponential;
    return sc;
}

LogCaseTag detect_log_case(FnId fn, double alpha) {
    LogCaseTag tag;
    for (int m = 1; m <= 200; ++m) {
        double target;
        switch (fn) {
        case FnId::Ein: target = 1.0 / m; break;
        case FnId::Sin: target = 1.0 / (2.0 * m); break;
        case FnId::Cin: target = 1.0 / (2.0 * m - 1.0); break;
        default:
            throw MleinError(Status::Usage,
                             "log-case tag defined for Ein/Sin/Cin only");
        }
        double diff = std::abs(alpha - target);
        if (diff < 1e-10) {
            tag.is_log_case = true;
            tag.m = m;
            return tag;
        }
        if (diff < 1e-6)
            tag.near_log = true;
    }
    return tag;
}

std::size_t optimal_truncate(const std::vector<double> &mags) {
    if (mags.empty())
        throw MleinError(Status::Usage,
                         "optimal_truncate: empty magnitude sequence");
    double running_min = mags[0];
    std::size_t best = 0;
    double best_v = mags[0];
    for (std::size_t i = 1; i < mags.size(); ++i) {
        if (mags[i] > running_min * kGrowthCutoff)
            break; // past the useful prefix
        if (mags[i] <= best_v) { // ties -> last index
            best_v = mags[i];
            best = i;
        }
        running_min = std::min(running_min, mags[i]);
    }
    return best;
}

TruncatedSum algebraic_H(double alpha, double beta, double gamma_param,
                         Polar z, int max_terms) {
    if (max_terms < 1 || max_terms > 200)
        throw MleinError(Status::Usage, "max_terms must be in 1..200");
    validate_z(z, 1.0 + 1e-300);
    double lmod = std::log(z.mod);
    HTerms H = gen_H(alpha, gamma_param, beta, lmod, z.arg, max_terms);
    TruncPick p = pick(H.terms, H.mags, 0);
    TruncatedSum out;
    out.value = H.c0 + p.sum;
    out.terms_used = p.count + 1; // constant term counts
    out.omitted_magnitude = p.omitted;
    return out;
}

TruncatedSum exponential_E(double alpha, double beta, Polar z,
                           int max_terms) {
    if (max_terms < 1 || max_terms > 100)
        throw MleinError(Status::Usage, "max_terms must be in 1..100");
    validate_z(z, 1.0 + 1e-300);
    double lmod = std::log(z.mod);
    ETerms E = gen_E(alpha, beta, 1.0, lmod, z.arg - kPi / alpha, max_terms);
    TruncPick p = pick(E.terms, E.mags, 0);
    TruncatedSum out;
    out.value = E.pref * p.sum;
    out.terms_used = p.count;
    out.omitted_magnitude = p.omitted * std::abs(E.pref);
    return out;
}

AsymResult ein_asymptotic(double alpha, double beta, Polar z,
                          const AsymOptions &opt) {
    if (!(alpha > 0.0 && alpha <= 2.0 + 1e-12))
        throw MleinError(Status::Domain, "alpha must lie in (0, 2]");
    validate_z(z, 3.0);
    if (z.arg < 0.0) {
        AsymResult r = ein_asymptotic(alpha, beta, {z.mod, -z.arg}, opt);
        r.value = std::conj(r.value);
        return r;
    }
    if (opt.stokes && std::abs(alpha - 1.0) < 1e-10 &&
        std::abs(z.arg) < 1e-14)
        return stokes_corrected_ein1(beta, z.mod, opt);
    return asym_core(alpha, 1.0, beta, std::log(z.mod), z.arg, opt);
}

AsymResult sin_asymptotic(double alpha, double beta, Polar z,
                          const AsymOptions &opt) {
    if (!(alpha > 0.0 && alpha <= 1.0 + 1e-12))
        throw MleinError(Status::Domain,
                         "sin_asymptotic requires 0 < alpha <= 1");
    validate_z(z, 3.0);
    if (z.arg < 0.0) {
        AsymResult r = sin_asymptotic(alpha, beta, {z.mod, -z.arg}, opt);
        r.value = std::conj(r.value);
        return r;
    }
    if (std::abs(alpha - 1.0) < 1e-10) {
        if (std::abs(z.arg) > 1e-14)
            throw MleinError(Status::Domain,
                             "sector violation: alpha = 1 expansion is "
                             "valid on the positive real axis only");
    } else if (z.arg >= kPi * (1.0 - alpha) / (2.0 * alpha) - 1e-12) {
        throw MleinError(Status::Domain,
                         "sector violation: |arg z| must be below "
                         "pi(1-alpha)/(2 alpha)");
    }
    return asym_core(2.0 * alpha, 1.0, beta - alpha, std::log(z.mod), z.arg,
                     opt);
}

AsymResult cin_asymptotic(double alpha, double beta, Polar z,
                          const AsymOptions &opt) {
    if (!(alpha > 0.0 && alpha <= 1.0 + 1e-12))
        throw MleinError(Status::Domain,
                         "cin_asymptotic requires 0 < alpha <= 1");
    validate_z(z, 3.0);
    if (z.arg < 0.0) {
        AsymResult r = cin_asymptotic(alpha, beta, {z.mod, -z.arg}, opt);
        r.value = std::conj(r.value);
        return r;
    }
    if (std::abs(alpha - 1.0) < 1e-10) {
        if (std::abs(z.arg) > 1e-14)
            throw MleinError(Status::Domain,
                             "sector violation: alpha = 1 expansion is "
                             "valid on the positive real axis only");
    } else if (z.arg >= kPi * (1.0 - alpha) / (2.0 * alpha) - 1e-12) {
        throw MleinError(Status::Domain,
                         "sector violation: |arg z| must be below "
                         "pi(1-alpha)/(2 alpha)");
    }
    return asym_core(2.0 * alpha, 1.0 + alpha, beta, std::log(z.mod), z.arg,
                     opt);
}

AsymResult stokes_corrected_ein1(double beta, double x,
                                 const AsymOptions &opt) {
    check_opts(opt);
    if (!(x >= 3.0))
        throw MleinError(Status::Domain,
                         "stokes_corrected_ein1 requires x >= 3");
    if (!(beta > 0.0))
        throw MleinError(Status::Domain,
                         "stokes_corrected_ein1 requires beta > 0");
    double lmod = std::log(x);
    AsymResult res;
    HTerms H = gen_H(1.0, 1.0, beta, lmod, 0.0, opt.max_alg_terms);
    TruncPick hp = pick(H.terms, H.mags, opt.d_alg);
    res.trunc_indices.push_back(hp.count);
    res.omitted_magnitude = hp.omitted;

    // Correction sum: sum_j (-)^j (beta)_j / x^j, optimally truncated.
    std::vector<cplx> terms;
    std::vector<double> mags;
    double c = 1.0;
    double minmag = 1e300;
    for (int j = 0; j < opt.max_exp_terms; ++j) {
        double t = c * std::exp(-j * lmod);
        double mag = std::abs(t);
        if (mag < 1e-320)
            break;
        terms.push_back(cplx((j % 2 != 0) ? -t : t, 0.0));
        mags.push_back(mag);
        if (mag < minmag)
            minmag = mag;
        else if (mag > minmag * kGrowthCutoff)
            break;
        c *= beta + static_cast<double>(j);
    }
    TruncPick cp = pick(terms, mags, opt.d_exp);
    res.trunc_indices.push_back(cp.count);
    double cospb = cos_pi(beta);
    double corr = 0.0;
    if (cospb != 0.0)
        corr = -std::exp(-x) * std::exp(-beta * lmod) * cospb *
               cp.sum.real();
    res.value = cplx((H.c0 + hp.sum).real() + corr, 0.0);
    res.branch = Branch::StokesCorrected;
    return res;
}

AsymResult f_chi_asymptotic(double alpha, double beta, double gamma_param,
                            Polar chi, const AsymOptions &opt) {
    if (!(alpha > 0.0 && alpha <= 2.0 + 1e-12))
        throw MleinError(Status::Domain,
                         "f_chi_asymptotic: alpha must lie in (0, 2]");
    if (!(gamma_param > 0.0))
        throw MleinError(Status::Domain, "gamma_param must be positive");
    validate_z(chi, std::pow(3.0, alpha));
    if (chi.arg > 0.0) {
        AsymResult r = f_chi_asymptotic(alpha, beta, gamma_param,
                                        {chi.mod, -chi.arg}, opt);
        r.value = std::conj(r.value);
        return r;
    }
    // chi = e^{-i pi} z^alpha: evaluate the z-combined engine at
    // log z = (log|chi| + i(arg chi + pi)) / alpha, then strip z^gamma.
    double lmod_z = std::log(chi.mod) / alpha;
    double th_z = (chi.arg + kPi) / alpha;
    AsymResult r = asym_core(alpha, gamma_param, beta, lmod_z, th_z, opt);
    r.value *= std::exp(-gamma_param * lmod_z) * cis(-gamma_param * th_z);
    return r;
}

cplx asym_leading(FnId fn, double alpha, double beta, Polar z) {
    if (!(z.mod > 0.0))
        throw MleinError(Status::Domain,
                         "asym_leading requires |z| > 0");
    double a, g, be;
    switch (fn) {
    case FnId::Ein: a = alpha; g = 1.0; be = beta; break;
    case FnId::Sin: a = 2.0 * alpha; g = 1.0; be = beta - alpha; break;
    case FnId::Cin: a = 2.0 * alpha; g = 1.0 + alpha; be = beta; break;
    default:
        throw MleinError(Status::Usage,
                         "asym_leading defined for Ein/Sin/Cin only");
    }
    HTerms H = gen_H(a, g, be, std::log(z.mod), z.arg, 3);
    cplx v = H.c0;
    if (!H.terms.empty() && H.kidx[0] == 0)
        v += H.terms[0];
    return v;
}

} // namespace mlein
