#pragma once

#include "common.hpp"

#include <string>

namespace mlein {

enum class FnId { Ein = 0, Sin = 1, Cin = 2, F = 3, ML = 4 };

struct OracleResult {
    cplx value{0.0, 0.0};     // rounded to double
    std::string re_str;       // 30 significant decimal digits
    std::string im_str;
    int terms_used = 0;
    double cancellation_digits = 0.0; // log10(max|term| / |sum|)
};

// Extended-precision series evaluation; digits >= 30 is the working
// precision in decimal digits (default 50 from the context layer).
// Guarantees >= 25 correct digits: two independent summation orders
// (forward and pairwise) must agree to 25 digits and the cancellation
// budget digits - cancellation_digits >= 25 must hold, else a
// precision-insufficient error is raised.
OracleResult oracle_eval(FnId fn, double alpha, double beta,
                         double gamma_param, Polar z, int digits);

// |approx - oracle| / |oracle| evaluated in extended precision.
double oracle_rel_err(FnId fn, double alpha, double beta, double gamma_param,
                      Polar z, cplx approx, int digits);

} // namespace mlein
