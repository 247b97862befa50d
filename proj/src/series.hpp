#pragma once

#include "common.hpp"

namespace mlein {

// Convergent-series evaluation (standard precision, ground truth for
// moderate |z|).  All take z in polar form; rel_tol in [1e-30, 1e-6].

TruncatedSum mittag_leffler(double alpha, double beta, Polar z, double rel_tol);
TruncatedSum ein_series(double alpha, double beta, Polar z, double rel_tol);
TruncatedSum sin_series(double alpha, double beta, Polar z, double rel_tol);
TruncatedSum cin_series(double alpha, double beta, Polar z, double rel_tol);

// Related function F(chi) with general gamma_param.
TruncatedSum f_series(double alpha, double beta, double gamma_param,
                      Polar chi, double rel_tol);

} // namespace mlein
