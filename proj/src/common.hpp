#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace mlein {

using cplx = std::complex<double>;

// z carried in polar form so that arg z = pi is exact on the negative
// real axis (principal branch closed from above).
struct Polar {
    double mod = 0.0;
    double arg = 0.0;
};

enum class Branch {
    Algebraic = 0,
    AlgebraicExponential = 1,
    LogCase = 2,
    Alpha2 = 3,
    StokesCorrected = 4
};

// Numeric values match the C API / CLI exit codes.
enum class Status {
    Ok = 0,
    Usage = 2,
    Domain = 3,
    Convergence = 4,
    Precision = 5
};

struct MleinError : std::runtime_error {
    Status status;
    MleinError(Status s, const std::string &msg)
        : std::runtime_error(msg), status(s) {}
};

struct TruncatedSum {
    cplx value{0.0, 0.0};
    int terms_used = 1;
    double omitted_magnitude = 0.0;
};

const char *branch_name(Branch b);

} // namespace mlein
