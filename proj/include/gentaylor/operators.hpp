#pragma once

#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include "gentaylor/interval.hpp"
#include "gentaylor/jet.hpp"
#include "gentaylor/smooth_function.hpp"

namespace gt {

/// Largest operator order accepted. Binomial coefficients up to this order
/// are exact integers in double precision.
inline constexpr int kMaxOperatorOrder = 12;

/// C(n, k) from a precomputed Pascal triangle, n <= kMaxOperatorOrder.
double binomial(int n, int k);

/// One coefficient a_k(x) of a linear differential operator, bundled with a
/// derivative oracle. Orders up to max_exact_order come from the caller's
/// closed form; higher orders use a central finite-difference fallback of the
/// highest exact derivative (step eps^(1/(2+d)) * max(1, |x|) for a d-th
/// difference) unless the fallback is disabled, in which case requesting them
/// raises CapabilityError.
class CoefficientBundle {
 public:
  using ValueFn = std::function<double(double)>;
  using DerivativeFn = std::function<double(double, int)>;

  CoefficientBundle(ValueFn value_fn, DerivativeFn derivative_oracle, int max_exact_order,
                    Interval domain, bool enable_fallback = true);

  /// Coefficient with closed-form derivatives of every order.
  static CoefficientBundle exact(ValueFn value_fn, DerivativeFn derivative_oracle,
                                 Interval domain);

  /// Constant coefficient; all derivatives vanish.
  static CoefficientBundle constant(double c, Interval domain);

  /// Only the value is known; every derivative goes through the fallback.
  static CoefficientBundle value_only(ValueFn value_fn, Interval domain,
                                      bool enable_fallback = true);

  double value(double x) const { return derivative_oracle_(x, 0); }
  double derivative(double x, int order) const;

  /// True when the given order would be served by the finite-difference path.
  bool fallback_used_for(int order) const { return order > max_exact_order_; }
  bool can_derive(int order) const {
    return order <= max_exact_order_ || enable_fallback_;
  }

  int max_exact_order() const { return max_exact_order_; }
  const Interval& domain() const { return domain_; }

 private:
  ValueFn value_fn_;
  DerivativeFn derivative_oracle_;
  int max_exact_order_;
  Interval domain_;
  bool enable_fallback_;
};

/// The operator F(y) = y^(n) + a_1(x) y^(n-1) + ... + a_n(x) y on a closed
/// interval, order 1 <= n <= 12. Immutable; all operations on it are pure.
class LinearOperator {
 public:
  /// Coefficients in the order [a_1, ..., a_n]; they must share a domain.
  explicit LinearOperator(std::vector<CoefficientBundle> coefficients);

  int order() const { return static_cast<int>(coefficients_.size()); }
  const Interval& domain() const { return domain_; }

  /// a_k, k = 1..n.
  const CoefficientBundle& coefficient(int k) const;

  /// The adjoint needs derivatives of a_k up to order n-k.
  bool adjoint_available() const;
  /// True when forming the adjoint would use the finite-difference fallback
  /// for at least one coefficient. Surfaced as metadata in results.
  bool adjoint_uses_fallback() const;

 private:
  std::vector<CoefficientBundle> coefficients_;
  Interval domain_;
};

/// F(y) at jet.point: y^(n) + a_1 y^(n-1) + ... + a_n y. Jet order >= n.
double apply_forward(const LinearOperator& op, const Jet& jet);

/// G(z) at z_jet.point:
/// (-1)^n [z^(n) - (a_1 z)^(n-1) + ... + (-1)^n a_n z],
/// product derivatives expanded by the Leibniz rule. Jet order >= n.
double apply_adjoint(const LinearOperator& op, const Jet& z_jet);

/// Bilinear concomitant Y(y, z) = sum_{m=0}^{n-1} y^(n-1-m) B_m(z) with
/// B_m(z) = sum_{j=0}^{m} (-1)^j (a_{m-j} z)^(j), a_0 = 1.
/// Both jets at the same point, order >= n-1.
double concomitant(const LinearOperator& op, const Jet& y_jet, const Jet& z_jet);

/// | d/dx Y(y,z) (centered difference, step h) - [z F(y) - y G(z)] | at x.
/// O(h^2) for smooth data; this is the numerical check of the Lagrange
/// identity z F(y) - y G(z) = d/dx Y(y, z).
double lagrange_residual(const LinearOperator& op, const SmoothFunction& y,
                         const SmoothFunction& z, double x, double h);

}  // namespace gt
