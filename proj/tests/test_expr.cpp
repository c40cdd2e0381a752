#include <cmath>

#include "doctest.h"
#include "gentaylor/errors.hpp"
#include "gentaylor/expr.hpp"

using gt::Expression;

TEST_CASE("polynomial jets are exact") {
  const Expression e = Expression::parse("x^3 - 2*x + 1/2");
  const gt::Jet j = e.jet(2.0, 5);
  CHECK(j[0] == doctest::Approx(4.5).epsilon(1e-15));
  CHECK(j[1] == doctest::Approx(10.0).epsilon(1e-15));
  CHECK(j[2] == doctest::Approx(12.0).epsilon(1e-15));
  CHECK(j[3] == doctest::Approx(6.0).epsilon(1e-15));
  CHECK(j[4] == 0.0);
  CHECK(j[5] == 0.0);
}

TEST_CASE("chain rule through affine arguments") {
  const Expression e = Expression::parse("sin(2*x - 1)");
  const double x = 0.37;
  const double u = 2.0 * x - 1.0;
  const gt::Jet j = e.jet(x, 4);
  CHECK(j[0] == doctest::Approx(std::sin(u)).epsilon(1e-14));
  CHECK(j[1] == doctest::Approx(2.0 * std::cos(u)).epsilon(1e-14));
  CHECK(j[2] == doctest::Approx(-4.0 * std::sin(u)).epsilon(1e-14));
  CHECK(j[3] == doctest::Approx(-8.0 * std::cos(u)).epsilon(1e-14));
  CHECK(j[4] == doctest::Approx(16.0 * std::sin(u)).epsilon(1e-14));
}

TEST_CASE("product rule via series multiplication") {
  const Expression e = Expression::parse("x^2 * exp(3*x)");
  const double x = 0.8;
  const double f = x * x * std::exp(3.0 * x);
  const double fp = (2.0 * x + 3.0 * x * x) * std::exp(3.0 * x);
  const gt::Jet j = e.jet(x, 1);
  CHECK(j[0] == doctest::Approx(f).epsilon(1e-14));
  CHECK(j[1] == doctest::Approx(fp).epsilon(1e-14));
}

TEST_CASE("hyperbolic and mixed terms") {
  const Expression e = Expression::parse("cosh(x) - sinh(x)");
  const double x = 1.25;
  CHECK(e.value(x) == doctest::Approx(std::exp(-x)).epsilon(1e-14));
  CHECK(e.jet(x, 3)[3] == doctest::Approx(-std::exp(-x)).epsilon(1e-13));
}

TEST_CASE("two-variable expressions for memory kernels") {
  const Expression n = Expression::parse("exp(x - t)", /*allow_t=*/true);
  CHECK(n.uses_t());
  CHECK(n.value(1.0, 0.5) == doctest::Approx(std::exp(0.5)).epsilon(1e-14));
  // The jet differentiates in x with t held fixed.
  CHECK(n.jet(1.0, 2, 0.5)[2] == doctest::Approx(std::exp(0.5)).epsilon(1e-14));

  CHECK_THROWS_AS(Expression::parse("x - t"), gt::InputError);
  CHECK_FALSE(Expression::parse("x + 1", /*allow_t=*/true).uses_t());
}

TEST_CASE("grammar rejections carry positions") {
  CHECK_THROWS_AS(Expression::parse("x +* 2"), gt::InputError);
  CHECK_THROWS_AS(Expression::parse("sin(x^2)"), gt::InputError);
  CHECK_THROWS_AS(Expression::parse("1/x"), gt::InputError);
  CHECK_THROWS_AS(Expression::parse("2^x"), gt::InputError);
  CHECK_THROWS_AS(Expression::parse("foo(x)"), gt::InputError);
  CHECK_THROWS_AS(Expression::parse(""), gt::InputError);
  CHECK_THROWS_AS(Expression::parse("x^-1"), gt::InputError);
  try {
    Expression::parse("x + (2 *");
    FAIL("expected InputError");
  } catch (const gt::InputError& e) {
    CHECK(std::string(e.what()).find("position") != std::string::npos);
  }
}

TEST_CASE("builder interface matches parsed text") {
  const Expression built =
      Expression::apply(Expression::Func::cos, Expression::affine(2.0, 0.0)) *
      Expression::variable_x().pow(2);
  const Expression parsed = Expression::parse("cos(2*x) * x^2");
  for (double x : {-1.3, 0.0, 0.4, 2.2}) {
    CHECK(built.value(x) == doctest::Approx(parsed.value(x)).epsilon(1e-14));
  }
}

TEST_CASE("scientific literals and unary minus") {
  const Expression e = Expression::parse("-2.5e-1*x + 1.5");
  CHECK(e.value(2.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(e.jet(2.0, 1)[1] == doctest::Approx(-0.25).epsilon(1e-15));
}

TEST_CASE("parsed text survives a round trip") {
  const Expression e = Expression::parse("exp(x)*cos(x - 1) + x^4/8");
  const Expression again = Expression::parse(e.text());
  CHECK(again.value(0.9) == doctest::Approx(e.value(0.9)).epsilon(1e-15));
}
