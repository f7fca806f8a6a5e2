#pragma once

#include <functional>

namespace pathent::quad {

// Adaptive integration of f over the finite interval (a, b) to an
// absolute-or-relative target tol. Integrable endpoint singularities are
// handled. Throws NumericError with diagnostics when the a-posteriori error
// estimate misses the target.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol = 1e-10);

}  // namespace pathent::quad
