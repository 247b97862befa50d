#include "series.hpp"
#include "gamma.hpp"

#include <cmath>
#include <functional>

namespace mlein {

namespace {

constexpr long kMaxTerms = 1000000;

void check_rel_tol(double rel_tol) {
    if (!(rel_tol >= 1e-30 && rel_tol <= 1e-6))
        throw MleinError(Status::Usage, "rel_tol must lie in [1e-30, 1e-6]");
}

void check_params(double alpha, Polar z) {
    if (!(alpha > 0.0))
        throw MleinError(Status::Domain, "alpha must be positive");
    if (!std::isfinite(z.mod) || !std::isfinite(z.arg) || z.mod < 0.0)
        throw MleinError(Status::Usage, "invalid argument z");
}

// term(n) must fill mag with |term_n|.  Stops after three consecutive
// terms with magnitude < rel_tol * |running sum|.
TruncatedSum sum_terms(const std::function<cplx(long, double &)> &term,
                       double rel_tol) {
    cplx sum(0.0, 0.0);
    int small_run = 0;
    long n = 0;
    for (; n < kMaxTerms; ++n) {
        double mag = 0.0;
        cplx t = term(n, mag);
        sum += t;
        double floor_ = std::max(std::abs(sum) * rel_tol, 1e-300);
        if (mag < floor_) {
            if (++small_run >= 3)
                break;
        } else {
            small_run = 0;
        }
    }
    if (n >= kMaxTerms)
        throw MleinError(Status::Convergence,
                         "series did not converge within 1e6 terms");
    double omitted = 0.0;
    term(n + 1, omitted);
    TruncatedSum out;
    out.value = sum;
    out.terms_used = static_cast<int>(n + 1);
    out.omitted_magnitude = omitted;
    return out;
}

cplx cis(double a) { return cplx(std::cos(a), std::sin(a)); }

// exp(p * log z) for polar z.
cplx polar_pow(Polar z, double p, double lmod) {
    return std::exp(p * lmod) * cis(p * z.arg);
}

// Common generator: terms sign_n * exp(e*n*lmod - log|G(gn*n+g0)|) /
// (dn*n + d0) with phase n*e*arg; the alternating (-1)^n is applied as
// an exact sign flip (folding it into the phase as n*pi would leave
// sin(n*pi) rounding noise that cancellation amplifies).
TruncatedSum alternating_series(Polar z, double rel_tol, double lmod,
                                double e, double gn, double g0,
                                double dn, double d0, bool alternating) {
    double phase_step = e * z.arg;
    auto term = [&](long n, double &mag) -> cplx {
        double ga = gn * static_cast<double>(n) + g0;
        double den = dn * static_cast<double>(n) + d0;
        double ground = std::round(ga);
        if (ground <= 0.0 && std::abs(ga - ground) < 1e-12) {
            mag = 0.0;
            return cplx(0.0, 0.0); // Gamma pole: term vanishes
        }
        auto lg = log_gamma_signed(ga);
        double m = std::exp(e * static_cast<double>(n) * lmod - lg.first) /
                   std::abs(den);
        mag = m;
        bool neg = (lg.second < 0) != (den < 0.0);
        if (alternating && (n % 2 != 0))
            neg = !neg;
        return (neg ? -m : m) * cis(static_cast<double>(n) * phase_step);
    };
    return sum_terms(term, rel_tol);
}

} // namespace

TruncatedSum mittag_leffler(double alpha, double beta, Polar z,
                            double rel_tol) {
    check_rel_tol(rel_tol);
    check_params(alpha, z);
    if (z.mod == 0.0) {
        TruncatedSum out;
        out.value = cplx(recip_gamma(beta), 0.0);
        return out;
    }
    double lmod = std::log(z.mod);
    return alternating_series(z, rel_tol, lmod, 1.0, alpha, beta, 0.0, 1.0,
                              false);
}

TruncatedSum ein_series(double alpha, double beta, Polar z, double rel_tol) {
    check_rel_tol(rel_tol);
    check_params(alpha, z);
    if (z.mod == 0.0)
        return TruncatedSum{}; // Ein(0) = 0 exactly
    double lmod = std::log(z.mod);
    TruncatedSum s = alternating_series(z, rel_tol, lmod, alpha, alpha,
                                        alpha + beta, alpha, 1.0, true);
    cplx pref = polar_pow(z, 1.0, lmod);
    s.value *= pref;
    s.omitted_magnitude *= z.mod;
    return s;
}

TruncatedSum sin_series(double alpha, double beta, Polar z, double rel_tol) {
    check_rel_tol(rel_tol);
    check_params(alpha, z);
    if (z.mod == 0.0)
        return TruncatedSum{};
    double lmod = std::log(z.mod);
    TruncatedSum s = alternating_series(z, rel_tol, lmod, 2.0 * alpha,
                                        2.0 * alpha, alpha + beta,
                                        2.0 * alpha, 1.0, true);
    s.value *= polar_pow(z, 1.0, lmod);
    s.omitted_magnitude *= z.mod;
    return s;
}

TruncatedSum cin_series(double alpha, double beta, Polar z, double rel_tol) {
    check_rel_tol(rel_tol);
    check_params(alpha, z);
    if (z.mod == 0.0)
        return TruncatedSum{};
    double lmod = std::log(z.mod);
    TruncatedSum s = alternating_series(z, rel_tol, lmod, 2.0 * alpha,
                                        2.0 * alpha, 2.0 * alpha + beta,
                                        2.0 * alpha, 1.0 + alpha, true);
    double pm = std::exp((1.0 + alpha) * lmod);
    s.value *= pm * cis((1.0 + alpha) * z.arg);
    s.omitted_magnitude *= pm;
    return s;
}

TruncatedSum f_series(double alpha, double beta, double gamma_param,
                      Polar chi, double rel_tol) {
    check_rel_tol(rel_tol);
    check_params(alpha, chi);
    if (!(gamma_param > 0.0))
        throw MleinError(Status::Domain, "gamma_param must be positive");
    if (chi.mod == 0.0) {
        TruncatedSum out;
        out.value = cplx(recip_gamma(alpha + beta) / gamma_param, 0.0);
        return out;
    }
    double lmod = std::log(chi.mod);
    return alternating_series(chi, rel_tol, lmod, 1.0, alpha, alpha + beta,
                              alpha, gamma_param, false);
}

} // namespace mlein
