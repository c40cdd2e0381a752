#include "gentaylor/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

#include "gentaylor/errors.hpp"

namespace gt {
namespace {

// Kronrod 15-point abscissae on [-1, 1]; the odd-index entries are the
// embedded Gauss 7-point nodes.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Panel {
    double a, b;
    double value;    // Kronrod estimate
    double error;    // |Kronrod - Gauss|
    bool operator<(const Panel& other) const { return error < other.error; }
};

Panel evaluate_panel(const std::function<double(double)>& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    double result_gauss = 0.0;
    double result_kronrod = 0.0;
    for (int j = 0; j < 7; ++j) {
        const double abscissa = half * kXgk[j];
        const double f1 = f(center - abscissa);
        const double f2 = f(center + abscissa);
        if (!std::isfinite(f1) || !std::isfinite(f2)) {
            throw EvaluationError("integrand returned a non-finite value inside [" +
                                  std::to_string(a) + ", " + std::to_string(b) + "]");
        }
        const double fsum = f1 + f2;
        result_kronrod += kWgk[j] * fsum;
        if (j % 2 == 1) result_gauss += kWg[j / 2] * fsum;
    }
    const double fc = f(center);
    if (!std::isfinite(fc)) {
        throw EvaluationError("integrand returned a non-finite value at " +
                              std::to_string(center));
    }
    result_kronrod += kWgk[7] * fc;
    result_gauss += kWg[3] * fc;

    Panel p;
    p.a = a;
    p.b = b;
    p.value = result_kronrod * half;
    p.error = std::abs((result_kronrod - result_gauss) * half);
    return p;
}

}  // namespace

QuadResult integrate_adaptive(const std::function<double(double)>& f,
                              double a, double b, double tol, int max_panels) {
    if (!std::isfinite(a) || !std::isfinite(b)) {
        throw ArgumentError("integration endpoints must be finite");
    }
    if (!(tol > 0.0)) {
        throw ArgumentError("integration tolerance must be positive");
    }
    if (max_panels < 1) {
        throw ArgumentError("panel budget must be at least 1");
    }
    if (a == b) return QuadResult{0.0, 0.0, 0};

    const double sign = (a <= b) ? 1.0 : -1.0;
    const double lo = std::min(a, b);
    const double hi = std::max(a, b);

    std::priority_queue<Panel> queue;
    QuadResult result;
    {
        Panel first = evaluate_panel(f, lo, hi);
        result.evaluations = 15;
        queue.push(first);
    }
    double total_value = queue.top().value;
    double total_error = queue.top().error;
    int panels = 1;

    while (true) {
        if (total_error <= tol * std::max(1.0, std::abs(total_value))) {
            return QuadResult{sign * total_value, total_error, result.evaluations};
        }
        if (panels >= max_panels) {
            throw AccuracyError(
                "integration used all " + std::to_string(max_panels) +
                    " panels without reaching the requested tolerance",
                sign * total_value, total_error);
        }
        Panel worst = queue.top();
        queue.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {
            // Roundoff has made the worst panel unsplittable: no further
            // refinement is possible no matter the budget.
            throw AccuracyError(
                "integration stalled on an unsplittable panel near " +
                    std::to_string(mid),
                sign * total_value, total_error);
        }
        Panel left = evaluate_panel(f, worst.a, mid);
        Panel right = evaluate_panel(f, mid, worst.b);
        total_value += left.value + right.value - worst.value;
        total_error += left.error + right.error - worst.error;
        queue.push(left);
        queue.push(right);
        result.evaluations += 30;
        ++panels;
    }
}

}  // namespace gt
