#include "gentaylor/operators.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <string>

namespace gt {

namespace {

constexpr int kPascalRows = kMaxOperatorOrder + 1;

std::array<std::array<double, kPascalRows>, kPascalRows> build_pascal() {
  std::array<std::array<double, kPascalRows>, kPascalRows> c{};
  for (int n = 0; n < kPascalRows; ++n) {
    c[n][0] = 1.0;
    for (int k = 1; k <= n; ++k) {
      c[n][k] = c[n - 1][k - 1] + (k <= n - 1 ? c[n - 1][k] : 0.0);
    }
  }
  return c;
}

const auto kPascal = build_pascal();

}  // namespace

double binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n || n > kMaxOperatorOrder) {
    throw ArgumentError("binomial(" + std::to_string(n) + ", " + std::to_string(k) +
                        ") outside the supported range");
  }
  return kPascal[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

CoefficientBundle::CoefficientBundle(ValueFn value_fn, DerivativeFn derivative_oracle,
                                     int max_exact_order, Interval domain, bool enable_fallback)
    : value_fn_(std::move(value_fn)),
      derivative_oracle_(std::move(derivative_oracle)),
      max_exact_order_(max_exact_order),
      domain_(domain),
      enable_fallback_(enable_fallback) {
  if (!value_fn_ || !derivative_oracle_) {
    throw ArgumentError("coefficient bundle needs both a value function and a derivative oracle");
  }
  if (max_exact_order_ < 0) throw ArgumentError("max_exact_order must be >= 0");
  // derivative_oracle(x, 0) must be value_fn(x) exactly; probe a few points.
  const double probes[] = {domain_.lo, 0.5 * (domain_.lo + domain_.hi), domain_.hi};
  for (double x : probes) {
    const double v = value_fn_(x);
    const double d0 = derivative_oracle_(x, 0);
    if (!(v == d0) && !(std::isnan(v) && std::isnan(d0))) {
      throw ArgumentError("derivative oracle at order 0 disagrees with the value function at x=" +
                          std::to_string(x));
    }
  }
}

CoefficientBundle CoefficientBundle::exact(ValueFn value_fn, DerivativeFn derivative_oracle,
                                           Interval domain) {
  return CoefficientBundle(std::move(value_fn), std::move(derivative_oracle),
                           std::numeric_limits<int>::max(), domain);
}

CoefficientBundle CoefficientBundle::constant(double c, Interval domain) {
  return exact([c](double) { return c; },
               [c](double, int order) { return order == 0 ? c : 0.0; }, domain);
}

CoefficientBundle CoefficientBundle::value_only(ValueFn value_fn, Interval domain,
                                                bool enable_fallback) {
  ValueFn copy = value_fn;
  return CoefficientBundle(
      std::move(value_fn), [copy](double x, int) { return copy(x); }, 0, domain, enable_fallback);
}

double CoefficientBundle::derivative(double x, int order) const {
  if (order < 0) throw ArgumentError("derivative order must be >= 0");
  if (order <= max_exact_order_) return derivative_oracle_(x, order);
  if (!enable_fallback_) {
    throw CapabilityError("coefficient derivative of order " + std::to_string(order) +
                          " unavailable (exact up to " + std::to_string(max_exact_order_) +
                          ", fallback disabled)");
  }
  // Central d-th difference of the highest exact derivative.
  const int base = max_exact_order_;
  const int d = order - base;
  const double eps = std::numeric_limits<double>::epsilon();
  const double h = std::pow(eps, 1.0 / (2.0 + d)) * std::max(1.0, std::abs(x));
  double sum = 0.0;
  for (int i = 0; i <= d; ++i) {
    const double offset = (0.5 * d - i) * h;
    const double sign = (i % 2 == 0) ? 1.0 : -1.0;
    sum += sign * binomial(d, i) * derivative_oracle_(x + offset, base);
  }
  return sum / std::pow(h, d);
}

LinearOperator::LinearOperator(std::vector<CoefficientBundle> coefficients)
    : coefficients_(std::move(coefficients)) {
  const int n = static_cast<int>(coefficients_.size());
  if (n < 1) throw ArgumentError("operator order must be >= 1");
  if (n > kMaxOperatorOrder) {
    throw ArgumentError("operator order " + std::to_string(n) + " exceeds the supported maximum " +
                        std::to_string(kMaxOperatorOrder));
  }
  domain_ = coefficients_.front().domain();
  for (const auto& c : coefficients_) {
    if (c.domain().lo != domain_.lo || c.domain().hi != domain_.hi) {
      throw ArgumentError("all coefficient bundles must share one domain");
    }
  }
}

const CoefficientBundle& LinearOperator::coefficient(int k) const {
  if (k < 1 || k > order()) {
    throw ArgumentError("coefficient index " + std::to_string(k) + " outside 1.." +
                        std::to_string(order()));
  }
  return coefficients_[static_cast<std::size_t>(k - 1)];
}

bool LinearOperator::adjoint_available() const {
  const int n = order();
  for (int k = 1; k <= n; ++k) {
    if (!coefficient(k).can_derive(n - k)) return false;
  }
  return true;
}

bool LinearOperator::adjoint_uses_fallback() const {
  const int n = order();
  for (int k = 1; k <= n; ++k) {
    for (int j = 1; j <= n - k; ++j) {
      if (coefficient(k).fallback_used_for(j)) return true;
    }
  }
  return false;
}

namespace {

double coefficient_value_checked(const LinearOperator& op, int k, double x) {
  const double v = op.coefficient(k).value(x);
  if (!std::isfinite(v)) {
    throw EvaluationError("coefficient a_" + std::to_string(k) + " is not finite at x=" +
                          std::to_string(x));
  }
  return v;
}

/// (a_k z)^(j) at the jet's point by the Leibniz rule; a_0 = 1.
double product_derivative(const LinearOperator& op, int k, const Jet& z_jet, int j) {
  if (k == 0) return z_jet[j];
  double sum = 0.0;
  for (int i = 0; i <= j; ++i) {
    const double a_i = i == 0 ? coefficient_value_checked(op, k, z_jet.point())
                              : op.coefficient(k).derivative(z_jet.point(), i);
    if (!std::isfinite(a_i)) {
      throw EvaluationError("derivative of coefficient a_" + std::to_string(k) +
                            " is not finite at x=" + std::to_string(z_jet.point()));
    }
    sum += binomial(j, i) * a_i * z_jet[j - i];
  }
  return sum;
}

}  // namespace

double apply_forward(const LinearOperator& op, const Jet& jet) {
  const int n = op.order();
  if (jet.order() < n) {
    throw ArgumentError("apply_forward needs a jet of order >= " + std::to_string(n));
  }
  if (!op.domain().contains(jet.point())) {
    throw ArgumentError("jet point outside the operator domain");
  }
  double result = jet[n];
  for (int k = 1; k <= n; ++k) {
    result += coefficient_value_checked(op, k, jet.point()) * jet[n - k];
  }
  return result;
}

double apply_adjoint(const LinearOperator& op, const Jet& z_jet) {
  const int n = op.order();
  if (z_jet.order() < n) {
    throw ArgumentError("apply_adjoint needs a jet of order >= " + std::to_string(n));
  }
  if (!op.domain().contains(z_jet.point())) {
    throw ArgumentError("jet point outside the operator domain");
  }
  double sum = 0.0;
  for (int k = 0; k <= n; ++k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    sum += sign * product_derivative(op, k, z_jet, n - k);
  }
  return (n % 2 == 0 ? 1.0 : -1.0) * sum;
}

double concomitant(const LinearOperator& op, const Jet& y_jet, const Jet& z_jet) {
  const int n = op.order();
  if (y_jet.point() != z_jet.point()) {
    throw ArgumentError("concomitant jets must share a point");
  }
  if (y_jet.order() < n - 1 || z_jet.order() < n - 1) {
    throw ArgumentError("concomitant needs jets of order >= " + std::to_string(n - 1));
  }
  if (!op.domain().contains(y_jet.point())) {
    throw ArgumentError("jet point outside the operator domain");
  }
  double total = 0.0;
  for (int m = 0; m <= n - 1; ++m) {
    double b_m = 0.0;
    for (int j = 0; j <= m; ++j) {
      const double sign = (j % 2 == 0) ? 1.0 : -1.0;
      b_m += sign * product_derivative(op, m - j, z_jet, j);
    }
    total += y_jet[n - 1 - m] * b_m;
  }
  return total;
}

double lagrange_residual(const LinearOperator& op, const SmoothFunction& y,
                         const SmoothFunction& z, double x, double h) {
  if (!(h > 0.0)) throw ArgumentError("lagrange_residual needs h > 0");
  if (!op.domain().contains(x - h) || !op.domain().contains(x + h)) {
    throw ArgumentError("x +- h must stay inside the operator domain");
  }
  const int n = op.order();
  const double up = concomitant(op, y.jet(x + h, n - 1), z.jet(x + h, n - 1));
  const double down = concomitant(op, y.jet(x - h, n - 1), z.jet(x - h, n - 1));
  const double dY = (up - down) / (2.0 * h);
  const Jet yx = y.jet(x, n);
  const Jet zx = z.jet(x, n);
  const double rhs = zx[0] * apply_forward(op, yx) - yx[0] * apply_adjoint(op, zx);
  return std::abs(dY - rhs);
}

}  // namespace gt
