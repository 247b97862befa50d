#pragma once

#include "common.hpp"
#include "oracle.hpp" // FnId

#include <cstddef>

namespace mlein {

struct AsymOptions {
    bool stokes = false;
    int max_alg_terms = 200;  // algebraic series cap (<= 200)
    int max_exp_terms = 100;  // exponential series cap
    // Truncation offsets relative to the least-term index; used by the
    // acceptance harness to probe the "at, or near, the least term"
    // +-1 latitude.  0 = optimal truncation.
    int d_alg = 0;
    int d_exp = 0;
};

struct AsymResult {
    cplx value{0.0, 0.0};
    Branch branch = Branch::Algebraic;
    std::vector<int> trunc_indices; // nonzero terms summed per series
    double omitted_magnitude = 0.0; // largest first-omitted magnitude
    std::vector<std::string> warnings;
};

struct SectorClass {
    double theta0; // pi(2-alpha)/(2 alpha)
    enum class Regime {
        AlgebraicOnly,
        AlgebraicPlusExponential,
        AlphaEquals2,
        SubTwoThirds
    } regime;
};

struct LogCaseTag {
    bool is_log_case = false;
    int m = 0;
    bool near_log = false; // within (1e-10, 1e-6): conditioning warning
};

SectorClass classify_sector(double alpha, double arg_z);
LogCaseTag detect_log_case(FnId fn, double alpha);

// Index of the least term per the paper's optimal-truncation policy:
// argmin of the magnitudes (ties -> last) over the prefix ending where a
// magnitude first exceeds the running minimum by a factor 1e10.
std::size_t optimal_truncate(const std::vector<double> &mags);

// Algebraic expansion H combined with the z^gamma prefactor (Eq. 3.2 /
// generic-gamma form); pre |z| > 1, max_terms <= 200.
TruncatedSum algebraic_H(double alpha, double beta, double gamma_param,
                         Polar z, int max_terms);

// Exponential expansion E_{alpha,beta}(z) (Eq. 3.3), upper-sign
// convention built in.
TruncatedSum exponential_E(double alpha, double beta, Polar z, int max_terms);

// Theorem 1/2 dispatch for Ein_{alpha,beta}; 0 < alpha <= 2, |z| >= 3.
AsymResult ein_asymptotic(double alpha, double beta, Polar z,
                          const AsymOptions &opt = {});

// Theorems 3/5 for Sin; 0 < alpha <= 1, sector |arg z| < pi(1-alpha)/(2 alpha).
AsymResult sin_asymptotic(double alpha, double beta, Polar z,
                          const AsymOptions &opt = {});

// Theorems 4/5 for Cin (internal gamma = 1+alpha).
AsymResult cin_asymptotic(double alpha, double beta, Polar z,
                          const AsymOptions &opt = {});

// Eq. 3.10: Stokes-corrected alpha = 1 expansion on the real axis, x >= 3.
AsymResult stokes_corrected_ein1(double beta, double x,
                                 const AsymOptions &opt = {});

// Generic-gamma engine for F(chi) per Eqs. 2.10-2.11; |chi| >= 3^alpha.
AsymResult f_chi_asymptotic(double alpha, double beta, double gamma_param,
                            Polar chi, const AsymOptions &opt = {});

// Leading-order approximation (constant/log part plus the k = 0 algebraic
// term): the dashed curves of the figures.  No lower bound on |z|.
cplx asym_leading(FnId fn, double alpha, double beta, Polar z);

} // namespace mlein
