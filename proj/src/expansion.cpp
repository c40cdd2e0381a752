#include "gentaylor/expansion.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "gentaylor/errors.hpp"
#include "gentaylor/quadrature.hpp"

namespace gt {
namespace {

KernelPath resolve_path(const LinearOperator& op, KernelPath requested) {
  if (requested == KernelPath::automatic) {
    return op.adjoint_available() ? KernelPath::adjoint : KernelPath::forward;
  }
  if (requested == KernelPath::adjoint && !op.adjoint_available()) {
    throw CapabilityError(
        "the adjoint kernel path needs coefficient derivatives that are "
        "unavailable; use the forward path or enable the fallback");
  }
  return requested;
}

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= static_cast<double>(i);
  return f;
}

// K(x, s) at fixed x as a function of s, one initial-value solve per call.
double kernel_by_forward_solve(const LinearOperator& op, double x, double s,
                               const SolveConfig& cfg) {
  if (x == s) return (op.order() == 1) ? 1.0 : 0.0;
  const KernelSlice slice = cauchy_kernel(op, s, Interval::hull(x, s), cfg);
  return slice.value(x);
}

}  // namespace

ReconstructionReport reconstruct(const LinearOperator& op,
                                 const SmoothFunction& f, double x0, double x,
                                 KernelPath path, const SolveConfig& cfg,
                                 double quad_tol) {
  const int n = op.order();
  if (!std::isfinite(x0) || !std::isfinite(x)) {
    throw ArgumentError("expansion points must be finite");
  }
  const KernelPath used = resolve_path(op, path);
  const double kernel_sign = (n % 2 == 1) ? 1.0 : -1.0;  // (-1)^(n-1)

  ReconstructionReport report;
  report.path_used = used;

  const Jet f0 = f.jet(x0, n - 1);
  QuadResult quad{0.0, 0.0, 0};

  if (used == KernelPath::adjoint) {
    report.coefficient_fallback_used = op.adjoint_uses_fallback();
    const AdjointSlice phi = adjoint_phi(op, x, Interval::hull(x, x0), cfg);
    const std::vector<double> lam = fundamental_from_adjoint(phi, x0);
    for (int i = 0; i < n; ++i) {
      report.initial_data_part += lam[static_cast<std::size_t>(i)] * f0[i];
    }
    if (x != x0) {
      quad = integrate_adaptive(
          [&](double s) {
            return kernel_sign * phi.value(s) * apply_forward(op, f.jet(s, n));
          },
          x0, x, quad_tol);
    }
  } else {
    const FundamentalSet fs = fundamental_set(op, x0, Interval::hull(x, x0), cfg);
    for (int i = 1; i <= n; ++i) {
      report.initial_data_part += fs.value(i, x) * f0[i - 1];
    }
    if (x != x0) {
      quad = integrate_adaptive(
          [&](double s) {
            return kernel_by_forward_solve(op, x, s, cfg) *
                   apply_forward(op, f.jet(s, n));
          },
          x0, x, quad_tol);
    }
  }

  report.remainder_part = quad.value;
  report.quad_error_estimate = quad.error_estimate;
  report.total = report.initial_data_part + report.remainder_part;
  report.reference_value = f.value(x);
  report.discrepancy = std::abs(report.total - report.reference_value);
  return report;
}

ReconstructionReport classical_taylor(const SmoothFunction& f, int n,
                                      double x0, double x, double quad_tol) {
  if (n < 1 || n > kMaxOperatorOrder) {
    throw ArgumentError("expansion order " + std::to_string(n) +
                        " out of range 1.." + std::to_string(kMaxOperatorOrder));
  }
  if (!std::isfinite(x0) || !std::isfinite(x)) {
    throw ArgumentError("expansion points must be finite");
  }

  ReconstructionReport result;
  const Jet f0 = f.jet(x0, n - 1);
  double power = 1.0;  // (x - x0)^i / i!
  for (int i = 0; i < n; ++i) {
    result.initial_data_part += f0[i] * power;
    power *= (x - x0) / static_cast<double>(i + 1);
  }

  if (x != x0) {
    const double scale = 1.0 / factorial(n - 1);
    const QuadResult quad = integrate_adaptive(
        [&](double s) {
          return scale * std::pow(x - s, n - 1) * f.derivative(s, n);
        },
        x0, x, quad_tol);
    result.remainder_part = quad.value;
    result.quad_error_estimate = quad.error_estimate;
  }
  result.total = result.initial_data_part + result.remainder_part;
  result.reference_value = f.value(x);
  result.discrepancy = std::abs(result.total - result.reference_value);
  return result;
}

CauchyPoint cauchy_solve(const LinearOperator& op, double x0,
                         const std::vector<double>& init,
                         const std::function<double(double)>& forcing, double x,
                         KernelPath path, const SolveConfig& cfg,
                         double quad_tol) {
  const int n = op.order();
  if (static_cast<int>(init.size()) != n) {
    throw ArgumentError("initial data has " + std::to_string(init.size()) +
                        " entries, expected " + std::to_string(n));
  }
  if (!forcing) throw ArgumentError("cauchy_solve needs a forcing function");
  const KernelPath used = resolve_path(op, path);
  const double kernel_sign = (n % 2 == 1) ? 1.0 : -1.0;

  CauchyPoint point;
  point.x = x;
  QuadResult quad{0.0, 0.0, 0};

  if (used == KernelPath::adjoint) {
    const AdjointSlice phi = adjoint_phi(op, x, Interval::hull(x, x0), cfg);
    const std::vector<double> lam = fundamental_from_adjoint(phi, x0);
    for (int i = 0; i < n; ++i) {
      point.homogeneous_part +=
          lam[static_cast<std::size_t>(i)] * init[static_cast<std::size_t>(i)];
    }
    if (x != x0) {
      quad = integrate_adaptive(
          [&](double s) { return kernel_sign * phi.value(s) * forcing(s); },
          x0, x, quad_tol);
    }
  } else {
    const FundamentalSet fs = fundamental_set(op, x0, Interval::hull(x, x0), cfg);
    for (int i = 1; i <= n; ++i) {
      point.homogeneous_part +=
          fs.value(i, x) * init[static_cast<std::size_t>(i - 1)];
    }
    if (x != x0) {
      quad = integrate_adaptive(
          [&](double s) {
            return kernel_by_forward_solve(op, x, s, cfg) * forcing(s);
          },
          x0, x, quad_tol);
    }
  }

  point.particular_part = quad.value;
  point.quad_error_estimate = quad.error_estimate;
  point.value = point.homogeneous_part + point.particular_part;
  return point;
}

std::vector<CauchyPoint> cauchy_solve_grid(
    const LinearOperator& op, double x0, const std::vector<double>& init,
    const std::function<double(double)>& forcing, const std::vector<double>& xs,
    KernelPath path, const SolveConfig& cfg, double quad_tol) {
  std::vector<CauchyPoint> points;
  points.reserve(xs.size());
  for (double x : xs) {
    points.push_back(cauchy_solve(op, x0, init, forcing, x, path, cfg, quad_tol));
  }
  return points;
}

}  // namespace gt
