#include "gamma.hpp"

#include <cmath>

namespace mlein {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kLogSqrt2Pi = 0.91893853320467274178032973640561764;

// Lanczos coefficients (Godfrey), g = 607/128, ~16 significant digits.
constexpr double kLanczosG = 607.0 / 128.0;
constexpr double kLanczos[15] = {
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

cplx log_gamma_core(cplx z) {
    // Re z >= 0.5 assumed.
    cplx sum(kLanczos[0], 0.0);
    for (int k = 1; k < 15; ++k)
        sum += kLanczos[k] / (z - 1.0 + static_cast<double>(k));
    cplx t = z + (kLanczosG - 0.5);
    return (z - 0.5) * std::log(t) - t + kLogSqrt2Pi + std::log(sum);
}

// log sin(pi z), principal values adequate for |Im z| up to ~1e2.
cplx log_sin_pi(cplx z) {
    return std::log(std::sin(kPi * z));
}

} // namespace

const char *branch_name(Branch b) {
    switch (b) {
    case Branch::Algebraic: return "algebraic";
    case Branch::AlgebraicExponential: return "algebraic+exponential";
    case Branch::LogCase: return "log-case";
    case Branch::Alpha2: return "alpha2";
    case Branch::StokesCorrected: return "stokes-corrected";
    }
    return "unknown";
}

cplx log_gamma(cplx z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw MleinError(Status::Usage, "log_gamma: non-finite argument");
    if (z.imag() == 0.0 && z.real() <= 0.0 &&
        std::abs(z.real() - std::round(z.real())) < 1e-300)
        throw MleinError(Status::Domain, "log_gamma: pole at non-positive integer");
    if (z.real() >= 0.5)
        return log_gamma_core(z);
    // Reflection: log G(z) = log pi - log sin(pi z) - log G(1 - z).
    return std::log(cplx(kPi, 0.0)) - log_sin_pi(z) - log_gamma_core(1.0 - z);
}

std::pair<double, int> log_gamma_signed(double x) {
    if (x > 0.0)
        return {std::lgamma(x), 1};
    // Non-integer negative x: sign alternates by unit interval.
    double fl = std::floor(x);
    int sign = (static_cast<long long>(fl) % 2 == 0) ? 1 : -1;
    return {std::lgamma(x), sign};
}

double sin_pi(double x) {
    double n = std::round(x);
    double r = x - n;
    double s = std::sin(kPi * r);
    // sin(pi(n+r)) = (-1)^n sin(pi r); exact zero when r == 0.
    if (std::fmod(n, 2.0) != 0.0)
        s = -s;
    return s;
}

double cos_pi(double x) {
    double n = std::round(x);
    double r = x - n;
    double c = std::cos(kPi * r); // never exactly 0 here: |r| <= 0.5
    if (std::abs(r) == 0.5)
        c = 0.0; // half-integer: exact zero
    if (std::fmod(n, 2.0) != 0.0)
        c = -c;
    return c;
}

double recip_gamma(double x) {
    double n = std::round(x);
    if (n <= 0.0 && std::abs(x - n) < 1e-12)
        return 0.0; // pole of Gamma: 1/Gamma vanishes exactly
    if (x <= 0.5) {
        // Reflection form guarantees exact zeros at the poles
        // (tie at x == 0.5 uses this branch by design).
        return sin_pi(x) / kPi * std::exp(std::lgamma(1.0 - x));
    }
    return std::exp(-std::lgamma(x));
}

double digamma(double x) {
    if (!std::isfinite(x))
        throw MleinError(Status::Domain, "digamma: non-finite argument");
    if (x <= 0.0) {
        double n = std::round(x);
        if (std::abs(x - n) < 1e-12)
            throw MleinError(Status::Domain,
                             "digamma: pole at non-positive integer");
        // Reflection psi(x) = psi(1-x) - pi cot(pi x) extends the x > 0
        // kernel to the negative arguments reached by the log-case
        // constant (e.g. psi(alpha+beta-1) at alpha=1/2, beta=1/3).
        return digamma(1.0 - x) - kPi * cos_pi(x) / sin_pi(x);
    }
    double result = 0.0;
    while (x < 10.0) {
        result -= 1.0 / x;
        x += 1.0;
    }
    // Asymptotic series with Bernoulli coefficients B_{2n}/(2n).
    double inv = 1.0 / x;
    double inv2 = inv * inv;
    double series = inv2 * (1.0 / 12.0 -
                    inv2 * (1.0 / 120.0 -
                    inv2 * (1.0 / 252.0 -
                    inv2 * (1.0 / 240.0 -
                    inv2 * (1.0 / 132.0 -
                    inv2 * (691.0 / 32760.0 -
                    inv2 * (1.0 / 12.0)))))));
    result += std::log(x) - 0.5 * inv - series;
    return result;
}

double pochhammer(double a, int j) {
    double p = 1.0;
    for (int i = 0; i < j; ++i)
        p *= a + static_cast<double>(i);
    return p;
}

} // namespace mlein
