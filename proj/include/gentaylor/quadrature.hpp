#pragma once

#include <cstdint>
#include <functional>

namespace gt {

// Result of an adaptive integration: the value, a conservative error
// estimate (sum of per-panel estimates), and the number of integrand
// evaluations spent.
struct QuadResult {
    double value = 0.0;
    double error_estimate = 0.0;
    std::int64_t evaluations = 0;
};

// Adaptive integration of f over [a, b] with a nested Gauss-Kronrod 7/15
// rule and global bisection of the worst panel.  The integral is signed:
// a > b yields the negated value of the swapped-endpoint integral, and
// a == b returns zero without evaluating f.
//
// Throws AccuracyError when the panel budget is exhausted before the
// requested tolerance is met; the exception carries the best value and
// its estimate.
QuadResult integrate_adaptive(const std::function<double(double)>& f,
                              double a, double b, double tol,
                              int max_panels = 10000);

}  // namespace gt
