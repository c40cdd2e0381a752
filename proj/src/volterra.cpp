#include "gentaylor/volterra.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <string>
#include <utility>

#include "gentaylor/errors.hpp"
#include "gentaylor/quadrature.hpp"

namespace gt {
namespace {

void check_problem(const IntegroDifferentialProblem& p) {
  if (!p.memory_kernel) {
    throw ArgumentError("integro-differential problem needs a memory kernel");
  }
  if (static_cast<int>(p.init.size()) != p.op.order()) {
    throw ArgumentError("initial data has " + std::to_string(p.init.size()) +
                        " entries, expected " + std::to_string(p.op.order()));
  }
  if (!std::isfinite(p.x0)) {
    throw ArgumentError("base point must be finite");
  }
}

double span_slack(const Interval& span) {
  return 1e-9 * std::max({1.0, std::abs(span.lo), std::abs(span.hi)});
}

// Shared state behind the two callables produced by reduce(). The slice for
// a given x serves both free_term(x) and every kernel(x, t) of that row, and
// the memoized values make the step-halving pass reuse the coarse-grid work.
struct ReductionCache {
  ReductionCache(IntegroDifferentialProblem p, const SolveConfig& c, double qt)
      : problem(std::move(p)),
        cfg(c),
        quad_tol(qt),
        kernel_sign((problem.op.order() % 2 == 1) ? 1.0 : -1.0) {}

  IntegroDifferentialProblem problem;
  SolveConfig cfg;
  double quad_tol;
  double kernel_sign;  // (-1)^(n-1)

  std::map<double, AdjointSlice> slices;
  std::map<double, double> free_term_values;
  std::map<std::pair<double, double>, double> kernel_values;

  const AdjointSlice& slice_for(double x, double also_cover) {
    auto it = slices.find(x);
    if (it != slices.end() && it->second.covered().contains(also_cover, 1e-12)) {
      return it->second;
    }
    const double lo = std::min({problem.x0, x, also_cover});
    const double hi = std::max({problem.x0, x, also_cover});
    AdjointSlice slice = adjoint_phi(problem.op, x, Interval(lo, hi), cfg);
    if (it != slices.end()) slices.erase(it);
    return slices.emplace(x, std::move(slice)).first->second;
  }

  double free_term(double x) {
    auto it = free_term_values.find(x);
    if (it != free_term_values.end()) return it->second;

    const int n = problem.op.order();
    const AdjointSlice& phi = slice_for(x, problem.x0);
    const std::vector<double> lam = fundamental_from_adjoint(phi, problem.x0);
    double value = 0.0;
    for (int i = 0; i < n; ++i) {
      value += lam[static_cast<std::size_t>(i)] *
               problem.init[static_cast<std::size_t>(i)];
    }
    if (problem.forcing && x != problem.x0) {
      const QuadResult q = integrate_adaptive(
          [&](double s) { return kernel_sign * phi.value(s) * problem.forcing(s); },
          problem.x0, x, quad_tol);
      value += q.value;
    }
    free_term_values.emplace(x, value);
    return value;
  }

  double kernel(double x, double t) {
    if (x == t) return 0.0;
    const auto key = std::make_pair(x, t);
    auto it = kernel_values.find(key);
    if (it != kernel_values.end()) return it->second;

    const AdjointSlice& phi = slice_for(x, std::min(t, problem.x0));
    const QuadResult q = integrate_adaptive(
        [&](double s) {
          return kernel_sign * phi.value(s) * problem.memory_kernel(s, t);
        },
        t, x, quad_tol);
    kernel_values.emplace(key, q.value);
    return q.value;
  }
};

std::vector<double> uniform_nodes(double x0, double h, int steps) {
  std::vector<double> xs(static_cast<std::size_t>(steps) + 1);
  for (int i = 0; i <= steps; ++i) {
    xs[static_cast<std::size_t>(i)] = x0 + static_cast<double>(i) * h;
  }
  return xs;
}

void check_march_range(double x0, double end, int steps) {
  if (!std::isfinite(end)) throw ArgumentError("march end must be finite");
  if (end == x0) {
    throw ArgumentError("marching needs a range of nonzero length");
  }
  if (steps < 4) throw ArgumentError("marching needs at least four steps");
}

GridSolution march_volterra(const VolterraProblem& p, double end, int steps) {
  const double h = (end - p.x0) / static_cast<double>(steps);
  GridSolution sol;
  sol.nodes = uniform_nodes(p.x0, h, steps);
  sol.values.resize(sol.nodes.size());
  sol.step = std::abs(h);

  sol.values[0] = p.free_term(sol.nodes[0]);
  for (int k = 1; k <= steps; ++k) {
    const double xk = sol.nodes[static_cast<std::size_t>(k)];
    double acc = 0.5 * p.kernel(xk, sol.nodes[0]) * sol.values[0];
    for (int j = 1; j < k; ++j) {
      acc += p.kernel(xk, sol.nodes[static_cast<std::size_t>(j)]) *
             sol.values[static_cast<std::size_t>(j)];
    }
    const double diag = 1.0 - 0.5 * h * p.kernel(xk, xk);
    if (std::abs(diag) < 1e-12) {
      throw StepSizeError("trapezoidal marching hit a near-singular factor at x = " +
                              std::to_string(xk),
                          xk);
    }
    sol.values[static_cast<std::size_t>(k)] = (p.free_term(xk) + h * acc) / diag;
    if (!std::isfinite(sol.values[static_cast<std::size_t>(k)])) {
      throw EvaluationError("marching produced a non-finite value at x = " +
                            std::to_string(xk));
    }
  }
  return sol;
}

GridSolution march_ide(const IntegroDifferentialProblem& p, double end,
                       int steps) {
  const int n = p.op.order();
  const std::size_t nd = static_cast<std::size_t>(n);
  const double h = (end - p.x0) / static_cast<double>(steps);

  GridSolution sol;
  sol.nodes = uniform_nodes(p.x0, h, steps);
  sol.values.resize(sol.nodes.size());
  sol.step = std::abs(h);
  sol.values[0] = p.init[0];

  const auto node = [&](int j) { return sol.nodes[static_cast<std::size_t>(j)]; };
  const auto value = [&](int j) { return sol.values[static_cast<std::size_t>(j)]; };

  // Trapezoidal sum of N(xi, .) y(.) over the accepted nodes x_0 .. x_k.
  const auto history_part = [&](double xi, int k) {
    if (k == 0) return 0.0;
    double acc = 0.5 * (p.memory_kernel(xi, node(0)) * value(0) +
                        p.memory_kernel(xi, node(k)) * value(k));
    for (int j = 1; j < k; ++j) {
      acc += p.memory_kernel(xi, node(j)) * value(j);
    }
    return h * acc;
  };

  // y at the off-node abscissa x_k + c h, by Lagrange extrapolation through
  // the most recent accepted values (cubic once four nodes exist).
  const auto predict = [&](int k, double c) {
    const int m = std::min(k, 3);
    double acc = 0.0;
    for (int i = 0; i <= m; ++i) {
      // Node x_{k-m+i} sits at offset i - m from x_k in units of h.
      double basis = 1.0;
      for (int j = 0; j <= m; ++j) {
        if (j != i) {
          basis *= (c - static_cast<double>(j - m)) / static_cast<double>(i - j);
        }
      }
      acc += basis * value(k - m + i);
    }
    return acc;
  };

  // Memory integral at stage abscissa xi = x_k + c h: history through x_k
  // plus a trapezoidal tail over [x_k, xi] closed with the predicted value.
  const auto memory_at = [&](int k, double c) {
    const double xi = node(k) + c * h;
    double acc = history_part(xi, k);
    if (c > 0.0) {
      acc += 0.5 * c * h * (p.memory_kernel(xi, node(k)) * value(k) +
                            p.memory_kernel(xi, xi) * predict(k, c));
    }
    return acc;
  };

  std::vector<double> u(p.init.begin(), p.init.end());
  std::vector<double> k1(nd), k2(nd), k3(nd), k4(nd), stage(nd);

  // Companion derivative with the memory term supplied by the caller.
  const auto deriv = [&](double xi, const std::vector<double>& state,
                         double memory, std::vector<double>& out) {
    for (int i = 0; i + 1 < n; ++i) {
      out[static_cast<std::size_t>(i)] = state[static_cast<std::size_t>(i) + 1];
    }
    double top = (p.forcing ? p.forcing(xi) : 0.0) + memory;
    for (int k = 1; k <= n; ++k) {
      top -= p.op.coefficient(k).value(xi) * state[static_cast<std::size_t>(n - k)];
    }
    out[nd - 1] = top;
  };

  for (int k = 0; k < steps; ++k) {
    const double xk = node(k);
    const double xm = xk + 0.5 * h;
    const double xn = node(k + 1);

    // The memory term at a stage abscissa depends only on the accepted
    // history, so the two midpoint stages share one value.
    const double mem_k = history_part(xk, k);
    const double mem_m = memory_at(k, 0.5);
    const double mem_n = memory_at(k, 1.0);

    deriv(xk, u, mem_k, k1);
    for (std::size_t i = 0; i < nd; ++i) stage[i] = u[i] + 0.5 * h * k1[i];
    deriv(xm, stage, mem_m, k2);
    for (std::size_t i = 0; i < nd; ++i) stage[i] = u[i] + 0.5 * h * k2[i];
    deriv(xm, stage, mem_m, k3);
    for (std::size_t i = 0; i < nd; ++i) stage[i] = u[i] + h * k3[i];
    deriv(xn, stage, mem_n, k4);

    for (std::size_t i = 0; i < nd; ++i) {
      u[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
    if (!std::isfinite(u[0])) {
      throw EvaluationError("marching produced a non-finite value at x = " +
                            std::to_string(xn));
    }
    sol.values[static_cast<std::size_t>(k) + 1] = u[0];
  }
  return sol;
}

void attach_halving_estimate(GridSolution* coarse, const GridSolution& fine) {
  double worst = 0.0;
  for (std::size_t i = 0; i < coarse->values.size(); ++i) {
    worst = std::max(worst, std::abs(coarse->values[i] - fine.values[2 * i]));
  }
  coarse->error_estimate = worst;
}

}  // namespace

VolterraProblem reduce(const IntegroDifferentialProblem& problem,
                       const Interval& span, const SolveConfig& cfg,
                       double quad_tol) {
  check_problem(problem);
  if (!problem.op.adjoint_available()) {
    throw CapabilityError(
        "reduction needs the dual kernel description, which requires "
        "coefficient derivatives that are unavailable for this operator");
  }
  const double slack = span_slack(problem.op.domain());
  if (!(problem.op.domain().contains(span.lo, slack) &&
        problem.op.domain().contains(span.hi, slack))) {
    throw ArgumentError("reduction span exceeds the operator domain");
  }
  if (!span.contains(problem.x0, span_slack(span))) {
    throw ArgumentError("reduction span must contain the base point");
  }

  auto cache = std::make_shared<ReductionCache>(problem, cfg, quad_tol);

  VolterraProblem out;
  out.x0 = problem.x0;
  out.span = span;
  out.free_term = [cache](double x) { return cache->free_term(x); };
  out.kernel = [cache](double x, double t) { return cache->kernel(x, t); };
  return out;
}

GridSolution solve_volterra(const VolterraProblem& problem, double end,
                            int steps, bool with_error_estimate) {
  if (!problem.free_term || !problem.kernel) {
    throw ArgumentError("Volterra problem needs free-term and kernel callables");
  }
  check_march_range(problem.x0, end, steps);
  const double slack = span_slack(problem.span);
  if (!(problem.span.contains(problem.x0, slack) &&
        problem.span.contains(end, slack))) {
    throw ArgumentError("march range leaves the problem span");
  }
  GridSolution sol = march_volterra(problem, end, steps);
  if (with_error_estimate) {
    const GridSolution fine = march_volterra(problem, end, 2 * steps);
    attach_halving_estimate(&sol, fine);
  }
  return sol;
}

GridSolution solve_ide_direct(const IntegroDifferentialProblem& problem,
                              double end, int steps, bool with_error_estimate) {
  check_problem(problem);
  check_march_range(problem.x0, end, steps);
  const double slack = span_slack(problem.op.domain());
  if (!(problem.op.domain().contains(problem.x0, slack) &&
        problem.op.domain().contains(end, slack))) {
    throw ArgumentError("march range leaves the operator domain");
  }
  GridSolution sol = march_ide(problem, end, steps);
  if (with_error_estimate) {
    const GridSolution fine = march_ide(problem, end, 2 * steps);
    attach_halving_estimate(&sol, fine);
  }
  return sol;
}

double cross_validate(const IntegroDifferentialProblem& problem, double end,
                      int steps, const SolveConfig& cfg, double quad_tol) {
  const VolterraProblem reduced =
      reduce(problem, Interval::hull(problem.x0, end), cfg, quad_tol);
  const GridSolution via = solve_volterra(reduced, end, steps, false);
  const GridSolution direct = solve_ide_direct(problem, end, steps, false);
  double worst = 0.0;
  for (std::size_t i = 0; i < via.values.size(); ++i) {
    worst = std::max(worst, std::abs(via.values[i] - direct.values[i]));
  }
  return worst;
}

}  // namespace gt
