#include "gentaylor/ode.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <utility>

#include "gentaylor/errors.hpp"

namespace gt {
namespace {

// Dormand-Prince 5(4) tableau.
constexpr double kC2 = 0.2, kC3 = 0.3, kC4 = 0.8, kC5 = 8.0 / 9.0;
constexpr double kA21 = 0.2;
constexpr double kA31 = 3.0 / 40.0, kA32 = 9.0 / 40.0;
constexpr double kA41 = 44.0 / 45.0, kA42 = -56.0 / 15.0, kA43 = 32.0 / 9.0;
constexpr double kA51 = 19372.0 / 6561.0, kA52 = -25360.0 / 2187.0,
                 kA53 = 64448.0 / 6561.0, kA54 = -212.0 / 729.0;
constexpr double kA61 = 9017.0 / 3168.0, kA62 = -355.0 / 33.0,
                 kA63 = 46732.0 / 5247.0, kA64 = 49.0 / 176.0,
                 kA65 = -5103.0 / 18656.0;
constexpr double kB1 = 35.0 / 384.0, kB3 = 500.0 / 1113.0, kB4 = 125.0 / 192.0,
                 kB5 = -2187.0 / 6784.0, kB6 = 11.0 / 84.0;
// Difference between the 5th- and 4th-order weights.
constexpr double kE1 = 71.0 / 57600.0, kE3 = -71.0 / 16695.0,
                 kE4 = 71.0 / 1920.0, kE5 = -17253.0 / 339200.0,
                 kE6 = 22.0 / 525.0, kE7 = -1.0 / 40.0;
// Quartic dense-output weights.
constexpr double kD1 = -12715105075.0 / 11282082432.0;
constexpr double kD3 = 87487479700.0 / 32700410799.0;
constexpr double kD4 = -10690763975.0 / 1880347072.0;
constexpr double kD5 = 701980252875.0 / 199316789632.0;
constexpr double kD6 = -1453857185.0 / 822651844.0;
constexpr double kD7 = 69997945.0 / 29380423.0;

template <class EvalT>
double initial_step(EvalT&& eval, int dim, double tau0,
                    const std::vector<double>& y, const std::vector<double>& f0,
                    double hmax, const SolveConfig& cfg) {
  const std::size_t nd = static_cast<std::size_t>(dim);
  double dnf = 0.0, dny = 0.0;
  for (std::size_t i = 0; i < nd; ++i) {
    const double sk = cfg.abs_tol + cfg.rel_tol * std::abs(y[i]);
    dnf += (f0[i] / sk) * (f0[i] / sk);
    dny += (y[i] / sk) * (y[i] / sk);
  }
  double h = (dnf <= 1e-10 || dny <= 1e-10) ? 1e-6 : std::sqrt(dny / dnf) * 0.01;
  h = std::min(h, hmax);

  // One explicit Euler step to estimate the second derivative.
  std::vector<double> y1(nd), f1(nd);
  for (std::size_t i = 0; i < nd; ++i) y1[i] = y[i] + h * f0[i];
  eval(tau0 + h, y1, f1);
  double der2 = 0.0;
  for (std::size_t i = 0; i < nd; ++i) {
    const double sk = cfg.abs_tol + cfg.rel_tol * std::abs(y[i]);
    der2 += ((f1[i] - f0[i]) / sk) * ((f1[i] - f0[i]) / sk);
  }
  der2 = std::sqrt(der2) / h;

  const double der12 = std::max(std::abs(der2), std::sqrt(dnf));
  double h1 = (der12 <= 1e-15) ? std::max(1e-6, std::abs(h) * 1e-3)
                               : std::pow(0.01 / der12, 0.2);
  if (!std::isfinite(h1)) h1 = 1e-6;
  return std::min({100.0 * h, h1, hmax});
}

// One directed sweep in the internal variable tau = sign * x, always with
// tau increasing. LegT is Trajectory::Leg, passed as a template parameter so
// this file-local helper can fill the private nested type.
template <class LegT>
void run_leg(const OdeRhs& rhs, int dim, double sign, double tau0,
             double tau_end, const std::vector<double>& y_init,
             const SolveConfig& cfg, LegT* leg) {
  const std::size_t nd = static_cast<std::size_t>(dim);
  auto eval = [&](double tau, const std::vector<double>& state,
                  std::vector<double>& out) {
    if (sign > 0.0) {
      rhs(tau, state.data(), out.data());
    } else {
      rhs(-tau, state.data(), out.data());
      for (double& v : out) v = -v;
    }
  };

  leg->sign = sign;
  leg->tau_begin = tau0;
  leg->tau_end = tau0;
  leg->nodes.push_back(tau0);

  std::vector<double> y = y_init;
  std::vector<double> k1(nd), k2(nd), k3(nd), k4(nd), k5(nd), k6(nd), k7(nd);
  std::vector<double> ytmp(nd), y1(nd);

  eval(tau0, y, k1);
  for (double v : k1) {
    if (!std::isfinite(v)) {
      throw EvaluationError(
          "right-hand side is not finite at the initial point x = " +
          std::to_string(sign * tau0));
    }
  }

  const double hmax = tau_end - tau0;
  double h = initial_step(eval, dim, tau0, y, k1, hmax, cfg);

  constexpr double kSafe = 0.9, kBeta = 0.04;
  constexpr double kExpo1 = 0.2 - kBeta * 0.75;
  constexpr double kFacc1 = 5.0;   // largest shrink factor per step
  constexpr double kFacc2 = 0.1;   // largest growth is 1/kFacc2
  double facold = 1e-4;
  bool reject = false;
  bool last = false;
  long nstep = 0;
  double tau = tau0;

  while (true) {
    if (nstep >= cfg.max_steps) {
      throw ResourceError("solver exceeded " + std::to_string(cfg.max_steps) +
                          " steps before reaching x = " +
                          std::to_string(sign * tau_end));
    }
    ++nstep;
    if (tau + 1.01 * h >= tau_end) {
      h = tau_end - tau;
      last = true;
    }
    if (!last && h < cfg.min_step * std::max(1.0, std::abs(tau))) {
      throw StepSizeError("step size underflow (possible singularity or "
                          "non-smooth data) near x = " +
                              std::to_string(sign * tau),
                          sign * tau);
    }

    for (std::size_t i = 0; i < nd; ++i) ytmp[i] = y[i] + h * kA21 * k1[i];
    eval(tau + kC2 * h, ytmp, k2);
    for (std::size_t i = 0; i < nd; ++i)
      ytmp[i] = y[i] + h * (kA31 * k1[i] + kA32 * k2[i]);
    eval(tau + kC3 * h, ytmp, k3);
    for (std::size_t i = 0; i < nd; ++i)
      ytmp[i] = y[i] + h * (kA41 * k1[i] + kA42 * k2[i] + kA43 * k3[i]);
    eval(tau + kC4 * h, ytmp, k4);
    for (std::size_t i = 0; i < nd; ++i)
      ytmp[i] = y[i] + h * (kA51 * k1[i] + kA52 * k2[i] + kA53 * k3[i] +
                            kA54 * k4[i]);
    eval(tau + kC5 * h, ytmp, k5);
    for (std::size_t i = 0; i < nd; ++i)
      ytmp[i] = y[i] + h * (kA61 * k1[i] + kA62 * k2[i] + kA63 * k3[i] +
                            kA64 * k4[i] + kA65 * k5[i]);
    eval(tau + h, ytmp, k6);
    for (std::size_t i = 0; i < nd; ++i)
      y1[i] = y[i] + h * (kB1 * k1[i] + kB3 * k3[i] + kB4 * k4[i] +
                          kB5 * k5[i] + kB6 * k6[i]);
    eval(tau + h, y1, k7);

    double err = 0.0;
    for (std::size_t i = 0; i < nd; ++i) {
      const double ee = h * (kE1 * k1[i] + kE3 * k3[i] + kE4 * k4[i] +
                             kE5 * k5[i] + kE6 * k6[i] + kE7 * k7[i]);
      const double sk =
          cfg.abs_tol + cfg.rel_tol * std::max(std::abs(y[i]), std::abs(y1[i]));
      err += (ee / sk) * (ee / sk);
    }
    err = std::sqrt(err / static_cast<double>(nd));
    if (!std::isfinite(err)) err = 1e10;

    const double fac11 = std::pow(err, kExpo1);
    double fac = fac11 / std::pow(facold, kBeta);
    fac = std::max(kFacc2, std::min(kFacc1, fac / kSafe));
    double hnew = h / fac;

    if (err <= 1.0) {
      facold = std::max(err, 1e-4);

      std::vector<double> cont(5 * nd);
      for (std::size_t i = 0; i < nd; ++i) {
        const double ydiff = y1[i] - y[i];
        const double bspl = h * k1[i] - ydiff;
        cont[i] = y[i];
        cont[nd + i] = ydiff;
        cont[2 * nd + i] = bspl;
        cont[3 * nd + i] = ydiff - h * k7[i] - bspl;
        cont[4 * nd + i] = h * (kD1 * k1[i] + kD3 * k3[i] + kD4 * k4[i] +
                                kD5 * k5[i] + kD6 * k6[i] + kD7 * k7[i]);
      }
      leg->steps.push_back({tau, h, std::move(cont)});

      k1.swap(k7);
      y.swap(y1);
      tau = last ? tau_end : tau + h;
      leg->nodes.push_back(tau);
      leg->tau_end = tau;
      if (last) break;

      if (hnew > hmax) hnew = hmax;
      if (reject) hnew = std::min(hnew, h);
      reject = false;
      h = hnew;
    } else {
      h = h / std::min(kFacc1, fac11 / kSafe);
      reject = true;
      last = false;
    }
  }
}

void check_config(const SolveConfig& cfg) {
  if (!(cfg.rel_tol > 0.0) || !(cfg.abs_tol > 0.0)) {
    throw ArgumentError("solver tolerances must be positive");
  }
  if (cfg.max_steps < 1) throw ArgumentError("max_steps must be at least 1");
  if (!(cfg.min_step > 0.0)) throw ArgumentError("min_step must be positive");
}

void require_span_in_domain(const Interval& span, const Interval& domain) {
  const double slack =
      1e-9 * std::max({1.0, std::abs(domain.lo), std::abs(domain.hi)});
  if (span.lo < domain.lo - slack || span.hi > domain.hi + slack) {
    throw ArgumentError("requested span [" + std::to_string(span.lo) + ", " +
                        std::to_string(span.hi) +
                        "] leaves the operator's domain [" +
                        std::to_string(domain.lo) + ", " +
                        std::to_string(domain.hi) + "]");
  }
}

// y^(n) from the companion state of the forward equation F(y) = f.
double forward_top(const LinearOperator& op, double x, const double* state,
                   double forcing_value) {
  const int n = op.order();
  double acc = forcing_value;
  for (int k = 1; k <= n; ++k) {
    acc -= op.coefficient(k).value(x) * state[n - k];
  }
  return acc;
}

// z^(n) from the companion state of the adjoint equation G(z) = 0:
// z^(n) = sum_{k=1}^{n} (-1)^(k+1) (a_k z)^(n-k), products expanded by the
// Leibniz rule so only state components 0..n-1 appear.
double adjoint_top(const LinearOperator& op, double x, const double* state) {
  const int n = op.order();
  double acc = 0.0;
  for (int k = 1; k <= n; ++k) {
    const double sgn = (k % 2 == 1) ? 1.0 : -1.0;
    const CoefficientBundle& a = op.coefficient(k);
    for (int j = 0; j <= n - k; ++j) {
      acc += sgn * binomial(n - k, j) * a.derivative(x, j) * state[n - k - j];
    }
  }
  return acc;
}

OdeRhs companion_rhs(const LinearOperator& op,
                     std::function<double(double)> forcing) {
  return [op, forcing = std::move(forcing)](double x, const double* y,
                                            double* dy) {
    const int n = op.order();
    for (int i = 0; i + 1 < n; ++i) dy[i] = y[i + 1];
    dy[n - 1] = forward_top(op, x, y, forcing ? forcing(x) : 0.0);
  };
}

OdeRhs adjoint_rhs(const LinearOperator& op) {
  return [op](double x, const double* y, double* dy) {
    const int n = op.order();
    for (int i = 0; i + 1 < n; ++i) dy[i] = y[i + 1];
    dy[n - 1] = adjoint_top(op, x, y);
  };
}

std::vector<double> unit_top_data(int n) {
  std::vector<double> init(static_cast<std::size_t>(n), 0.0);
  init.back() = 1.0;
  return init;
}

void check_adjoint_capability(const LinearOperator& op) {
  const int n = op.order();
  for (int k = 1; k <= n; ++k) {
    if (!op.coefficient(k).can_derive(n - k)) {
      throw CapabilityError(
          "coefficient a_" + std::to_string(k) + " cannot supply derivative " +
          "order " + std::to_string(n - k) +
          " needed by the adjoint equation, and its fallback is disabled");
    }
  }
}

}  // namespace

Interval Trajectory::covered() const {
  if (empty()) throw ArgumentError("trajectory is empty");
  double lo = base_, hi = base_;
  for (const Leg& leg : legs_) {
    const double far = leg.sign * leg.tau_end;
    lo = std::min(lo, far);
    hi = std::max(hi, far);
  }
  return Interval(lo, hi);
}

bool Trajectory::covers(double x) const {
  if (empty()) return false;
  return covered().contains(x, 1e-9 * std::max(1.0, std::abs(x)));
}

const Trajectory::Leg* Trajectory::leg_for(double x) const {
  for (const Leg& leg : legs_) {
    if ((leg.sign > 0.0) == (x > base_)) return &leg;
  }
  return nullptr;
}

std::vector<double> Trajectory::state(double x) const {
  if (empty()) throw ArgumentError("trajectory is empty");
  if (x == base_) return y0_;
  const double slack = 1e-9 * std::max(1.0, std::abs(x));
  if (!covered().contains(x, slack)) {
    const Interval c = covered();
    throw ArgumentError("x = " + std::to_string(x) +
                        " is outside the solved span [" + std::to_string(c.lo) +
                        ", " + std::to_string(c.hi) + "]");
  }
  const Leg* leg = leg_for(x);
  if (leg == nullptr) {
    // x is within roundoff of the base point on a side with no sweep.
    return y0_;
  }

  const double tau = std::clamp(leg->sign * x, leg->tau_begin, leg->tau_end);
  const auto& steps = leg->steps;
  auto it = std::upper_bound(
      steps.begin(), steps.end(), tau,
      [](double value, const Step& s) { return value < s.t0; });
  const std::size_t idx =
      (it == steps.begin()) ? 0 : static_cast<std::size_t>(it - steps.begin() - 1);
  const Step& st = steps[idx];

  const double theta = std::clamp((tau - st.t0) / st.h, 0.0, 1.0);
  const double theta1 = 1.0 - theta;
  const std::size_t nd = static_cast<std::size_t>(dim_);
  std::vector<double> out(nd);
  for (std::size_t i = 0; i < nd; ++i) {
    out[i] = st.cont[i] +
             theta * (st.cont[nd + i] +
                      theta1 * (st.cont[2 * nd + i] +
                                theta * (st.cont[3 * nd + i] +
                                         theta1 * st.cont[4 * nd + i])));
  }
  return out;
}

double Trajectory::component(double x, int i) const {
  if (i < 0 || i >= dim_) {
    throw ArgumentError("component index " + std::to_string(i) +
                        " out of range for dimension " + std::to_string(dim_));
  }
  return state(x)[static_cast<std::size_t>(i)];
}

std::vector<double> Trajectory::node_points() const {
  std::vector<double> points{base_};
  for (const Leg& leg : legs_) {
    for (std::size_t j = 1; j < leg.nodes.size(); ++j) {
      points.push_back(leg.sign * leg.nodes[j]);
    }
  }
  std::sort(points.begin(), points.end());
  return points;
}

Trajectory integrate(const OdeRhs& rhs, int dim, double x0,
                     const std::vector<double>& y0, const Interval& span,
                     const SolveConfig& cfg) {
  if (!rhs) throw ArgumentError("integrate needs a right-hand side");
  if (dim < 1) throw ArgumentError("system dimension must be at least 1");
  if (static_cast<int>(y0.size()) != dim) {
    throw ArgumentError("initial state has " + std::to_string(y0.size()) +
                        " entries, expected " + std::to_string(dim));
  }
  for (double v : y0) {
    if (!std::isfinite(v)) throw ArgumentError("initial state is not finite");
  }
  if (!std::isfinite(x0)) throw ArgumentError("initial point must be finite");
  check_config(cfg);
  const double slack = 1e-12 * std::max(1.0, std::abs(x0));
  if (!span.contains(x0, slack)) {
    throw ArgumentError("initial point x0 = " + std::to_string(x0) +
                        " lies outside the requested span");
  }

  Trajectory tr;
  tr.dim_ = dim;
  tr.base_ = x0;
  tr.y0_ = y0;

  const double tiny = 4.0 * std::numeric_limits<double>::epsilon() *
                      std::max({1.0, std::abs(x0), std::abs(span.lo),
                                std::abs(span.hi)});
  if (span.hi - x0 > tiny) {
    Trajectory::Leg leg;
    run_leg(rhs, dim, +1.0, x0, span.hi, y0, cfg, &leg);
    tr.legs_.push_back(std::move(leg));
  }
  if (x0 - span.lo > tiny) {
    Trajectory::Leg leg;
    run_leg(rhs, dim, -1.0, -x0, -span.lo, y0, cfg, &leg);
    tr.legs_.push_back(std::move(leg));
  }
  return tr;
}

Trajectory solve_ivp(const LinearOperator& op, double x0,
                     const std::vector<double>& init,
                     const std::function<double(double)>& forcing,
                     const Interval& span, const SolveConfig& cfg) {
  if (static_cast<int>(init.size()) != op.order()) {
    throw ArgumentError("initial data has " + std::to_string(init.size()) +
                        " entries, expected " + std::to_string(op.order()));
  }
  require_span_in_domain(span, op.domain());
  return integrate(companion_rhs(op, forcing), op.order(), x0, init, span, cfg);
}

double FundamentalSet::value(int i, double x) const {
  return derivative(i, x, 0);
}

double FundamentalSet::derivative(int i, double x, int j) const {
  const int n = op_.order();
  if (i < 1 || i > n) {
    throw ArgumentError("fundamental-solution index " + std::to_string(i) +
                        " out of range 1.." + std::to_string(n));
  }
  if (j < 0 || j > n) {
    throw ArgumentError("derivative order " + std::to_string(j) +
                        " out of range 0.." + std::to_string(n));
  }
  const Trajectory& traj = columns_[static_cast<std::size_t>(i - 1)];
  const std::vector<double> state = traj.state(x);
  if (j < n) return state[static_cast<std::size_t>(j)];
  return forward_top(op_, x, state.data(), 0.0);
}

Jet FundamentalSet::jet(int i, double x, int max_order) const {
  const int n = op_.order();
  if (max_order < 0 || max_order > n) {
    throw ArgumentError("jet order " + std::to_string(max_order) +
                        " out of range 0.." + std::to_string(n));
  }
  if (i < 1 || i > n) {
    throw ArgumentError("fundamental-solution index " + std::to_string(i) +
                        " out of range 1.." + std::to_string(n));
  }
  const Trajectory& traj = columns_[static_cast<std::size_t>(i - 1)];
  std::vector<double> state = traj.state(x);
  std::vector<double> values(state.begin(),
                             state.begin() + std::min(max_order + 1, n));
  if (max_order == n) values.push_back(forward_top(op_, x, state.data(), 0.0));
  return Jet(x, std::move(values));
}

FundamentalSet fundamental_set(const LinearOperator& op, double x0,
                               const Interval& span, const SolveConfig& cfg) {
  require_span_in_domain(span, op.domain());
  const int n = op.order();
  const OdeRhs rhs = companion_rhs(op, {});
  std::vector<Trajectory> columns;
  columns.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    std::vector<double> init(static_cast<std::size_t>(n), 0.0);
    init[static_cast<std::size_t>(i - 1)] = 1.0;
    columns.push_back(integrate(rhs, n, x0, init, span, cfg));
  }
  return FundamentalSet(op, x0, std::move(columns));
}

double KernelSlice::value(double x) const { return derivative(x, 0); }

double KernelSlice::derivative(double x, int j) const {
  const int n = op_.order();
  if (j < 0 || j > n) {
    throw ArgumentError("derivative order " + std::to_string(j) +
                        " out of range 0.." + std::to_string(n));
  }
  const std::vector<double> state = traj_.state(x);
  if (j < n) return state[static_cast<std::size_t>(j)];
  return forward_top(op_, x, state.data(), 0.0);
}

KernelSlice cauchy_kernel(const LinearOperator& op, double s,
                          const Interval& span, const SolveConfig& cfg) {
  const Interval full(std::min(span.lo, s), std::max(span.hi, s));
  require_span_in_domain(full, op.domain());
  Trajectory traj = integrate(companion_rhs(op, {}), op.order(), s,
                              unit_top_data(op.order()), full, cfg);
  return KernelSlice(op, std::move(traj));
}

double AdjointSlice::value(double s) const { return derivative(s, 0); }

double AdjointSlice::derivative(double s, int j) const {
  const int n = op_.order();
  if (j < 0 || j > n) {
    throw ArgumentError("derivative order " + std::to_string(j) +
                        " out of range 0.." + std::to_string(n));
  }
  const std::vector<double> state = traj_.state(s);
  if (j < n) return state[static_cast<std::size_t>(j)];
  return adjoint_top(op_, s, state.data());
}

AdjointSlice adjoint_phi(const LinearOperator& op, double x,
                         const Interval& span, const SolveConfig& cfg) {
  check_adjoint_capability(op);
  const Interval full(std::min(span.lo, x), std::max(span.hi, x));
  require_span_in_domain(full, op.domain());
  Trajectory traj = integrate(adjoint_rhs(op), op.order(), x,
                              unit_top_data(op.order()), full, cfg);
  return AdjointSlice(op, std::move(traj));
}

std::vector<double> fundamental_from_adjoint(const AdjointSlice& phi,
                                             double x0) {
  const LinearOperator& op = phi.op();
  const int n = op.order();
  if (!phi.covered().contains(x0, 1e-9 * std::max(1.0, std::abs(x0)))) {
    throw ArgumentError("expansion point x0 = " + std::to_string(x0) +
                        " is outside the adjoint slice's span");
  }

  std::vector<double> pd(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) pd[static_cast<std::size_t>(j)] = phi.derivative(x0, j);

  const double lead = (n % 2 == 1) ? 1.0 : -1.0;
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) {
    double acc = 0.0;
    for (int j = 0; j <= r; ++j) {
      const int k = r - j;  // coefficient index; k = 0 is the unit leading one
      double term;
      if (k == 0) {
        term = pd[static_cast<std::size_t>(j)];
      } else {
        term = 0.0;
        const CoefficientBundle& a = op.coefficient(k);
        for (int i = 0; i <= j; ++i) {
          term += binomial(j, i) * a.derivative(x0, i) *
                  pd[static_cast<std::size_t>(j - i)];
        }
      }
      acc += ((j % 2 == 0) ? 1.0 : -1.0) * term;
    }
    out[static_cast<std::size_t>(n - 1 - r)] = lead * acc;
  }
  return out;
}

std::vector<double> fundamental_from_adjoint(const LinearOperator& op, double x0,
                                             double x, const SolveConfig& cfg) {
  return fundamental_from_adjoint(
      adjoint_phi(op, x, Interval::hull(x0, x), cfg), x0);
}

std::vector<std::vector<double>> kernel_table(const LinearOperator& op,
                                              const std::vector<double>& xs,
                                              const std::vector<double>& ss,
                                              const SolveConfig& cfg) {
  if (xs.empty() || ss.empty()) {
    throw ArgumentError("kernel table needs at least one x and one s value");
  }
  for (double v : xs) {
    if (!std::isfinite(v)) throw ArgumentError("grid point is not finite");
  }
  for (double v : ss) {
    if (!std::isfinite(v)) throw ArgumentError("grid point is not finite");
  }
  const auto [x_min_it, x_max_it] = std::minmax_element(xs.begin(), xs.end());
  const Interval x_hull(*x_min_it, *x_max_it);
  const double diagonal = (op.order() == 1) ? 1.0 : 0.0;

  std::vector<std::vector<double>> table(
      xs.size(), std::vector<double>(ss.size(), 0.0));
  for (std::size_t j = 0; j < ss.size(); ++j) {
    const KernelSlice slice = cauchy_kernel(op, ss[j], x_hull, cfg);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      table[i][j] = (xs[i] == ss[j]) ? diagonal : slice.value(xs[i]);
    }
  }
  return table;
}

}  // namespace gt
