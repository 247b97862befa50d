#pragma once

#include "common.hpp"

#include <utility>

namespace mlein {

// Principal-branch log Gamma for complex argument (Lanczos with reflection).
cplx log_gamma(cplx z);

// log |Gamma(x)| and the sign of Gamma(x) for real non-pole x.
std::pair<double, int> log_gamma_signed(double x);

// 1/Gamma(x): entire, exactly 0 within 1e-12 of a non-positive integer.
double recip_gamma(double x);

// psi(x) for real non-pole x (negative non-integers via reflection).
double digamma(double x);

// Rising factorial (a)_j by upward recurrence.
double pochhammer(double a, int j);

// sin(pi x), cos(pi x) with exact values at (half-)integers.
double sin_pi(double x);
double cos_pi(double x);

} // namespace mlein
