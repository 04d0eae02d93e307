#pragma once

#include <functional>

namespace csgauge::scalar {

/// Bisection on [lo, hi] where f(lo) and f(hi) have opposite signs (or one is 0).
/// Stops when the bracket is narrower than abs_tol or stops shrinking.
/// Throws std::invalid_argument if the bracket does not straddle a sign change.
double bisect(const std::function<double(double)>& f, double lo, double hi, double abs_tol = 1e-12);

/// Golden-section minimization of a unimodal f on [lo, hi]; returns the argmin.
double golden_min(const std::function<double(double)>& f, double lo, double hi, double abs_tol = 1e-10);

}  // namespace csgauge::scalar
