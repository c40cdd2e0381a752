#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "gentaylor/interval.hpp"
#include "gentaylor/jet.hpp"
#include "gentaylor/operators.hpp"
#include "gentaylor/smooth_function.hpp"

namespace gt {

namespace detail {
struct ExprNode;
}

/// Expressions over x (and optionally t) built from rational literals,
/// +, -, *, division by constants, nonnegative integer powers, and
/// sin/cos/sinh/cosh/exp applied to affine arguments. Jets with respect to x
/// are exact: structural rules only, no numerical differencing.
///
/// Text form examples: "1", "x^2 - 3/2*x", "sin(2*x + 1)", "exp(x)*cos(x - 1)".
class Expression {
 public:
  enum class Func { sin, cos, sinh, cosh, exp };

  /// Parse the text grammar. With allow_t, the variable t is also accepted
  /// (used for memory kernels N(x, t)). Throws InputError on bad input.
  static Expression parse(std::string_view text, bool allow_t = false);

  static Expression number(double value);
  static Expression variable_x();
  static Expression variable_t();
  /// c1*x + c0
  static Expression affine(double c1, double c0);
  /// f(arg); arg must be affine in x and t.
  static Expression apply(Func f, const Expression& arg);

  Expression operator+(const Expression& rhs) const;
  Expression operator-(const Expression& rhs) const;
  Expression operator*(const Expression& rhs) const;
  Expression operator-() const;
  Expression scaled(double c) const;
  Expression pow(int exponent) const;

  bool uses_t() const;

  double value(double x, double t = 0.0) const;
  /// Derivatives with respect to x at (x, t), orders 0..order.
  Jet jet(double x, int order, double t = 0.0) const;

  /// Source text when parsed, otherwise a synthesized form.
  const std::string& text() const { return text_; }

 private:
  Expression(std::shared_ptr<const detail::ExprNode> root, std::string text);
  std::shared_ptr<const detail::ExprNode> root_;
  std::string text_;
};

/// Wrap an expression (in x only) as a SmoothFunction with exact jets.
SmoothFunction make_smooth_function(const Expression& expr, std::string label = "");

/// Wrap an expression (in x only) as an operator coefficient with exact
/// derivatives of every order.
CoefficientBundle make_coefficient(const Expression& expr, const Interval& domain);

}  // namespace gt
