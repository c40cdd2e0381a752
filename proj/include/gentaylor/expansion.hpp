#pragma once

#include <functional>
#include <vector>

#include "gentaylor/ode.hpp"
#include "gentaylor/operators.hpp"
#include "gentaylor/smooth_function.hpp"

namespace gt {

/// How kernel values for the remainder integral are produced.
///  - adjoint: one backward-looking slice per evaluation point x; the same
///    slice also supplies the fundamental-solution values at x. Needs
///    coefficient derivatives (exact or by fallback).
///  - forward: one initial-value solve per quadrature node; only coefficient
///    values are needed, at a much higher cost per point.
///  - automatic: adjoint when available, otherwise forward.
enum class KernelPath { automatic, adjoint, forward };

/// One evaluation of the expansion
///   f(x) = sum_i y_i(x) f^(i-1)(x0) + integral_{x0}^{x} K(x,s) F[f](s) ds
/// split into its two parts, together with the directly evaluated f(x) for
/// comparison.
struct ReconstructionReport {
  double initial_data_part = 0.0;
  double remainder_part = 0.0;
  double total = 0.0;
  double reference_value = 0.0;
  double discrepancy = 0.0;  // |total - reference_value|
  double quad_error_estimate = 0.0;
  bool coefficient_fallback_used = false;
  KernelPath path_used = KernelPath::automatic;
};

ReconstructionReport reconstruct(const LinearOperator& op,
                                 const SmoothFunction& f, double x0, double x,
                                 KernelPath path = KernelPath::automatic,
                                 const SolveConfig& cfg = {},
                                 double quad_tol = 1e-10);

/// Classical order-n Taylor formula with integral remainder:
///   f(x) = sum_{i<n} f^(i)(x0) (x-x0)^i / i!
///          + integral_{x0}^{x} (x-s)^(n-1)/(n-1)! f^(n)(s) ds.
/// The Taylor polynomial lands in initial_data_part; no kernel solve is
/// involved, so the path and fallback fields keep their defaults.
ReconstructionReport classical_taylor(const SmoothFunction& f, int n, double x0,
                                      double x, double quad_tol = 1e-10);

/// One point of the solution of F(y) = g with prescribed initial data,
/// assembled from the fundamental solutions and the kernel integral
///   y(x) = sum_i y_i(x) c_{i-1} + integral_{x0}^{x} K(x,s) g(s) ds.
struct CauchyPoint {
  double x = 0.0;
  double homogeneous_part = 0.0;
  double particular_part = 0.0;
  double value = 0.0;
  double quad_error_estimate = 0.0;
};

CauchyPoint cauchy_solve(const LinearOperator& op, double x0,
                         const std::vector<double>& init,
                         const std::function<double(double)>& forcing, double x,
                         KernelPath path = KernelPath::automatic,
                         const SolveConfig& cfg = {}, double quad_tol = 1e-10);

std::vector<CauchyPoint> cauchy_solve_grid(
    const LinearOperator& op, double x0, const std::vector<double>& init,
    const std::function<double(double)>& forcing, const std::vector<double>& xs,
    KernelPath path = KernelPath::automatic, const SolveConfig& cfg = {},
    double quad_tol = 1e-10);

}  // namespace gt
