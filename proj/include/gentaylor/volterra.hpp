#pragma once

#include <functional>
#include <vector>

#include "gentaylor/interval.hpp"
#include "gentaylor/ode.hpp"
#include "gentaylor/operators.hpp"

namespace gt {

/// The problem F(y)(x) = f(x) + integral_{x0}^{x} N(x, t) y(t) dt with
/// prescribed y(x0), ..., y^(n-1)(x0).
struct IntegroDifferentialProblem {
  LinearOperator op;
  std::function<double(double)> forcing;                 // f(x), may be empty
  std::function<double(double, double)> memory_kernel;   // N(x, t)
  double x0 = 0.0;
  std::vector<double> init;
};

/// A second-kind Volterra equation y(x) = free_term(x) + integral_{x0}^{x}
/// kernel(x, t) y(t) dt, valid for x in span. Produced by reduce(); both
/// callables memoize, so repeated evaluation at marching nodes is cheap.
struct VolterraProblem {
  std::function<double(double)> free_term;             // Y(x)
  std::function<double(double, double)> kernel;        // N1(x, t)
  double x0 = 0.0;
  Interval span;
};

/// Rewrite an integro-differential problem as a Volterra equation of the
/// second kind for y itself:
///   free_term(x) = sum_i y_i(x) y^(i-1)(x0) + integral_{x0}^{x} K(x,s) f(s) ds,
///   kernel(x, t) = integral_{t}^{x} K(x, s) N(s, t) ds.
/// span bounds the x range the callables will be asked about; it must contain
/// x0 and stay inside the operator's domain.
VolterraProblem reduce(const IntegroDifferentialProblem& problem,
                       const Interval& span, const SolveConfig& cfg = {},
                       double quad_tol = 1e-10);

/// Solution values on the uniform marching grid nodes[k] = x0 + k * step.
struct GridSolution {
  std::vector<double> nodes;
  std::vector<double> values;
  double step = 0.0;  // node spacing magnitude
  /// Largest node-wise deviation from a rerun at twice the resolution;
  /// zero when no estimate was requested.
  double error_estimate = 0.0;
};

/// March the trapezoidal discretization of a second-kind Volterra equation
/// from x0 to end (either direction) with the given number of steps.
GridSolution solve_volterra(const VolterraProblem& problem, double end,
                            int steps, bool with_error_estimate = true);

/// Solve the integro-differential problem directly: classical Runge-Kutta on
/// the companion system, with the memory integral taken over the trapezoidal
/// history and the off-node stage values filled in by polynomial
/// interpolation of that history (cubic once enough nodes exist).
GridSolution solve_ide_direct(const IntegroDifferentialProblem& problem,
                              double end, int steps,
                              bool with_error_estimate = true);

/// Solve the problem both ways on the same grid -- reduction to a Volterra
/// equation vs. the direct solver -- and return the largest node-wise
/// difference between the two solutions.
double cross_validate(const IntegroDifferentialProblem& problem, double end,
                      int steps, const SolveConfig& cfg = {},
                      double quad_tol = 1e-10);

}  // namespace gt
