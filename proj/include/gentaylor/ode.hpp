#pragma once

#include <functional>
#include <vector>

#include "gentaylor/interval.hpp"
#include "gentaylor/jet.hpp"
#include "gentaylor/operators.hpp"

namespace gt {

/// Tolerances and budgets for the initial-value solver.
struct SolveConfig {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  long max_steps = 1000000;
  /// Steps below min_step * max(1, |x|) raise StepSizeError.
  double min_step = 1e-13;
};

/// Right-hand side of a first-order system: rhs(x, y, dy) fills dy[0..dim).
using OdeRhs = std::function<void(double x, const double* y, double* dy)>;

/// A solved initial-value problem with dense output over the covered span.
/// Evaluation anywhere inside the span interpolates the accepted steps of an
/// embedded 5(4) Runge-Kutta pair with a quartic interpolant per step, so the
/// interpolation error matches the integration tolerance.
class Trajectory {
 public:
  Trajectory() = default;

  bool empty() const { return dim_ == 0; }
  int dimension() const { return dim_; }

  /// The initial point; state(base()) returns the initial data exactly.
  double base() const { return base_; }

  Interval covered() const;
  bool covers(double x) const;

  /// All state components at x. x must lie in the covered span (a relative
  /// slack of ~1e-9 absorbs endpoint roundoff from grid construction).
  std::vector<double> state(double x) const;
  double component(double x, int i) const;

  /// Accepted step endpoints in ascending order, base point included.
  std::vector<double> node_points() const;

 private:
  friend Trajectory integrate(const OdeRhs& rhs, int dim, double x0,
                              const std::vector<double>& y0, const Interval& span,
                              const SolveConfig& cfg);

  struct Step {
    double t0 = 0.0;  // internal variable at the step start
    double h = 0.0;
    std::vector<double> cont;  // 5 interpolation coefficients per component
  };
  struct Leg {
    double sign = 1.0;  // internal variable = sign * x
    std::vector<Step> steps;
    std::vector<double> nodes;  // internal-variable mesh, ascending
    double tau_begin = 0.0;
    double tau_end = 0.0;
  };

  const Leg* leg_for(double x) const;

  int dim_ = 0;
  double base_ = 0.0;
  std::vector<double> y0_;
  std::vector<Leg> legs_;
};

/// Solve y' = rhs(x, y), y(x0) = y0, over the whole span (which must contain
/// x0). Spans extending to both sides of x0 are integrated as two outward
/// sweeps sharing the same initial data.
Trajectory integrate(const OdeRhs& rhs, int dim, double x0,
                     const std::vector<double>& y0, const Interval& span,
                     const SolveConfig& cfg = {});

/// Solve the forced equation F(y) = f(x) directly as a first-order system,
/// given y(x0), ..., y^(n-1)(x0). Pass an empty forcing for F(y) = 0.
Trajectory solve_ivp(const LinearOperator& op, double x0,
                     const std::vector<double>& init,
                     const std::function<double(double)>& forcing,
                     const Interval& span, const SolveConfig& cfg = {});

/// The n solutions y_1..y_n of F(y) = 0 determined by Kronecker initial data
/// at the base point: y_i^(j-1)(x0) = 1 if i == j else 0. These are the
/// coefficients multiplying y^(i-1)(x0) in the generalized Taylor expansion.
class FundamentalSet {
 public:
  int order() const { return op_.order(); }
  double base() const { return base_; }
  Interval covered() const { return columns_.front().covered(); }

  /// y_i(x), i = 1..n.
  double value(int i, double x) const;
  /// y_i^(j)(x), j = 0..n (order n comes from the differential equation).
  double derivative(int i, double x, int j) const;
  /// [y_i(x), ..., y_i^(m)(x)], m <= n.
  Jet jet(int i, double x, int max_order) const;

 private:
  friend FundamentalSet fundamental_set(const LinearOperator& op, double x0,
                                        const Interval& span, const SolveConfig& cfg);
  FundamentalSet(LinearOperator op, double base, std::vector<Trajectory> columns)
      : op_(std::move(op)), base_(base), columns_(std::move(columns)) {}

  LinearOperator op_;
  double base_ = 0.0;
  std::vector<Trajectory> columns_;
};

FundamentalSet fundamental_set(const LinearOperator& op, double x0,
                               const Interval& span, const SolveConfig& cfg = {});

/// K(x, s) for one fixed source point s, as a function of x. In x it solves
/// F(K) = 0 with K(s,s) = ... = K^(n-2)(s,s) = 0, K^(n-1)(s,s) = 1.
class KernelSlice {
 public:
  double source() const { return traj_.base(); }
  Interval covered() const { return traj_.covered(); }
  double value(double x) const;
  /// d^j K / dx^j, j = 0..n.
  double derivative(double x, int j) const;

 private:
  friend KernelSlice cauchy_kernel(const LinearOperator& op, double s,
                                   const Interval& span, const SolveConfig& cfg);
  KernelSlice(LinearOperator op, Trajectory traj)
      : op_(std::move(op)), traj_(std::move(traj)) {}

  LinearOperator op_;
  Trajectory traj_;
};

KernelSlice cauchy_kernel(const LinearOperator& op, double s,
                          const Interval& span, const SolveConfig& cfg = {});

/// phi(x, s) for one fixed x, as a function of s. In s it solves the adjoint
/// equation G(phi) = 0 with the unit-top jet at s = x, and it reproduces the
/// kernel through K(x, s) = (-1)^(n-1) phi(x, s).
class AdjointSlice {
 public:
  double anchor() const { return traj_.base(); }
  Interval covered() const { return traj_.covered(); }
  const LinearOperator& op() const { return op_; }
  double value(double s) const;
  /// d^j phi / ds^j, j = 0..n.
  double derivative(double s, int j) const;

 private:
  friend AdjointSlice adjoint_phi(const LinearOperator& op, double x,
                                  const Interval& span, const SolveConfig& cfg);
  AdjointSlice(LinearOperator op, Trajectory traj)
      : op_(std::move(op)), traj_(std::move(traj)) {}

  LinearOperator op_;
  Trajectory traj_;
};

/// Requires op.adjoint_available() (or the finite-difference fallback).
AdjointSlice adjoint_phi(const LinearOperator& op, double x,
                         const Interval& span, const SolveConfig& cfg = {});

/// The n fundamental-solution values [y_1(x), ..., y_n(x)] recovered from a
/// single adjoint slice anchored at x, using its jet at the expansion point
/// x0:  y_{n-r}(x) = (-1)^(n-1) * sum_{j=0}^{r} (-1)^j (a_{r-j} phi)^(j) |_{s=x0}.
std::vector<double> fundamental_from_adjoint(const AdjointSlice& phi, double x0);

/// Convenience form that performs the single adjoint solve internally.
std::vector<double> fundamental_from_adjoint(const LinearOperator& op, double x0,
                                             double x, const SolveConfig& cfg = {});

/// K(x, s) tabulated for every pair in xs x ss; result[i][j] = K(xs[i], ss[j]).
/// Diagonal entries are exact (0 for n >= 2, 1 for n = 1).
std::vector<std::vector<double>> kernel_table(const LinearOperator& op,
                                              const std::vector<double>& xs,
                                              const std::vector<double>& ss,
                                              const SolveConfig& cfg = {});

}  // namespace gt
