#include <cmath>
#include <vector>

#include "doctest.h"
#include "gentaylor/errors.hpp"
#include "gentaylor/expr.hpp"
#include "gentaylor/ode.hpp"

using gt::CoefficientBundle;
using gt::Interval;
using gt::LinearOperator;
using gt::SolveConfig;
using gt::Trajectory;

namespace {

constexpr double kPi = 3.14159265358979323846;
const Interval kDom{-10.0, 10.0};

LinearOperator harmonic() {
  return LinearOperator({CoefficientBundle::constant(0.0, kDom),
                         CoefficientBundle::constant(1.0, kDom)});
}

// y'' + (1/x) y' - (1/x^2) y = 0 on [0.4, 4]: solutions x and 1/x.
LinearOperator equidimensional() {
  const Interval dom{0.4, 4.0};
  auto inv = CoefficientBundle::exact(
      [](double x) { return 1.0 / x; },
      [](double x, int k) {
        double v = 1.0 / x;
        for (int j = 1; j <= k; ++j) v *= -static_cast<double>(j) / x;
        return v;
      },
      dom);
  auto neg_inv_sq = CoefficientBundle::exact(
      [](double x) { return -1.0 / (x * x); },
      [](double x, int k) {
        double v = -1.0 / (x * x);
        for (int j = 1; j <= k; ++j) v *= -static_cast<double>(j + 1) / x;
        return v;
      },
      dom);
  return LinearOperator({inv, neg_inv_sq});
}

}  // namespace

TEST_CASE("sine from its initial data, both directions") {
  const auto rhs = [](double, const double* y, double* dy) {
    dy[0] = y[1];
    dy[1] = -y[0];
  };
  const Trajectory tr =
      gt::integrate(rhs, 2, 0.0, {0.0, 1.0}, Interval(-2.0 * kPi, 2.0 * kPi));

  CHECK(tr.covers(2.0 * kPi));
  CHECK(tr.covers(-2.0 * kPi));
  CHECK_FALSE(tr.covers(7.0));

  for (double x : {-5.5, -kPi / 2.0, -0.1, 0.3, 1.0, kPi, 5.9, 2.0 * kPi}) {
    const std::vector<double> s = tr.state(x);
    CHECK(s[0] == doctest::Approx(std::sin(x)).epsilon(1e-9));
    CHECK(s[1] == doctest::Approx(std::cos(x)).epsilon(1e-9));
  }

  // At the base point the initial data comes back exactly.
  const std::vector<double> at0 = tr.state(0.0);
  CHECK(at0[0] == 0.0);
  CHECK(at0[1] == 1.0);

  const std::vector<double> nodes = tr.node_points();
  CHECK(nodes.front() == doctest::Approx(-2.0 * kPi));
  CHECK(nodes.back() == doctest::Approx(2.0 * kPi));
  for (std::size_t i = 1; i < nodes.size(); ++i) CHECK(nodes[i] > nodes[i - 1]);

  CHECK_THROWS_AS(tr.state(6.9), gt::ArgumentError);
  CHECK_THROWS_AS(tr.component(0.0, 2), gt::ArgumentError);
}

TEST_CASE("stiff-free decay reaches the far end accurately") {
  const auto rhs = [](double, const double* y, double* dy) { dy[0] = -y[0]; };
  const Trajectory tr = gt::integrate(rhs, 1, 0.0, {1.0}, Interval(0.0, 5.0));
  CHECK(tr.component(5.0, 0) ==
        doctest::Approx(std::exp(-5.0)).epsilon(1e-9));
}

TEST_CASE("blow-up triggers a step-size failure") {
  const auto rhs = [](double, const double* y, double* dy) {
    dy[0] = y[0] * y[0];
  };
  try {
    gt::integrate(rhs, 1, 0.0, {1.0}, Interval(0.0, 2.0));
    FAIL("expected StepSizeError");
  } catch (const gt::StepSizeError& e) {
    CHECK(e.location > 0.9);
    CHECK(e.location < 1.1);
  }
}

TEST_CASE("budget exhaustion is reported as a resource failure") {
  const auto rhs = [](double, const double* y, double* dy) {
    dy[0] = y[1];
    dy[1] = -y[0];
  };
  SolveConfig cfg;
  cfg.max_steps = 3;
  CHECK_THROWS_AS(
      gt::integrate(rhs, 2, 0.0, {0.0, 1.0}, Interval(0.0, 6.0), cfg),
      gt::ResourceError);
}

TEST_CASE("forced equation solved as a first-order system") {
  // y'' + y = x with zero initial data: y = x - sin(x).
  const Trajectory tr = gt::solve_ivp(
      harmonic(), 0.0, {0.0, 0.0}, [](double x) { return x; },
      Interval(0.0, 3.0));
  CHECK(tr.component(2.0, 0) ==
        doctest::Approx(2.0 - std::sin(2.0)).epsilon(1e-9));
}

TEST_CASE("fundamental solutions of the harmonic operator") {
  const gt::FundamentalSet fs =
      gt::fundamental_set(harmonic(), 0.0, Interval(-1.0, 2.0 * kPi));
  CHECK(fs.order() == 2);
  for (double x : {-0.8, 0.0, 1.3, 4.4}) {
    CHECK(fs.value(1, x) == doctest::Approx(std::cos(x)).epsilon(1e-9));
    CHECK(fs.value(2, x) == doctest::Approx(std::sin(x)).epsilon(1e-9));
    // Order-n derivative closes through the differential equation.
    CHECK(fs.derivative(1, x, 2) == doctest::Approx(-std::cos(x)).epsilon(1e-9));
  }
  const gt::Jet j = fs.jet(2, 1.3, 2);
  CHECK(j[0] == doctest::Approx(std::sin(1.3)).epsilon(1e-9));
  CHECK(j[1] == doctest::Approx(std::cos(1.3)).epsilon(1e-9));
  CHECK(j[2] == doctest::Approx(-std::sin(1.3)).epsilon(1e-9));
  CHECK_THROWS_AS(fs.value(3, 0.0), gt::ArgumentError);
  CHECK_THROWS_AS(fs.derivative(1, 0.0, 3), gt::ArgumentError);
}

TEST_CASE("fundamental solutions with variable coefficients") {
  const gt::FundamentalSet fs =
      gt::fundamental_set(equidimensional(), 1.0, Interval(0.5, 3.0));
  for (double x : {0.5, 0.9, 2.0, 3.0}) {
    CHECK(fs.value(1, x) ==
          doctest::Approx(0.5 * (x + 1.0 / x)).epsilon(1e-9));
    CHECK(fs.value(2, x) ==
          doctest::Approx(0.5 * (x - 1.0 / x)).epsilon(1e-9));
  }
}

TEST_CASE("kernel slice reproduces sin(x - s)") {
  const gt::KernelSlice ks =
      gt::cauchy_kernel(harmonic(), 0.7, Interval(0.0, 2.0 * kPi));
  CHECK(ks.source() == 0.7);
  CHECK(ks.value(0.7) == 0.0);
  CHECK(ks.value(2.0) == doctest::Approx(std::sin(1.3)).epsilon(1e-9));
  CHECK(ks.derivative(2.0, 1) == doctest::Approx(std::cos(1.3)).epsilon(1e-9));
  CHECK(ks.derivative(2.0, 2) == doctest::Approx(-std::sin(1.3)).epsilon(1e-9));
  CHECK(ks.value(0.2) == doctest::Approx(std::sin(-0.5)).epsilon(1e-9));
}

TEST_CASE("adjoint slice carries the dual description of the kernel") {
  const gt::AdjointSlice phi =
      gt::adjoint_phi(harmonic(), 2.0, Interval(0.0, 2.0 * kPi));
  CHECK(phi.anchor() == 2.0);
  // phi(x, s) = -sin(x - s) for the harmonic operator.
  CHECK(phi.value(0.5) == doctest::Approx(-std::sin(1.5)).epsilon(1e-9));
  CHECK(phi.derivative(0.5, 1) == doctest::Approx(std::cos(1.5)).epsilon(1e-9));
  // K(x, s) = (-1)^(n-1) phi(x, s) with n = 2.
  const gt::KernelSlice ks = gt::cauchy_kernel(harmonic(), 0.5, Interval(0.0, 2.5));
  CHECK(-phi.value(0.5) == doctest::Approx(ks.value(2.0)).epsilon(1e-9));
}

TEST_CASE("fundamental solutions recovered from one adjoint slice") {
  SUBCASE("constant coefficients") {
    const gt::AdjointSlice phi =
        gt::adjoint_phi(harmonic(), 1.2, Interval(0.0, 1.5));
    const std::vector<double> vals = gt::fundamental_from_adjoint(phi, 0.3);
    REQUIRE(vals.size() == 2);
    CHECK(vals[0] == doctest::Approx(std::cos(0.9)).epsilon(1e-8));
    CHECK(vals[1] == doctest::Approx(std::sin(0.9)).epsilon(1e-8));
  }
  SUBCASE("variable coefficients") {
    const gt::AdjointSlice phi =
        gt::adjoint_phi(equidimensional(), 2.5, Interval(0.8, 2.5));
    const std::vector<double> vals = gt::fundamental_from_adjoint(phi, 1.0);
    const gt::FundamentalSet fs =
        gt::fundamental_set(equidimensional(), 1.0, Interval(0.8, 2.5));
    REQUIRE(vals.size() == 2);
    CHECK(vals[0] == doctest::Approx(fs.value(1, 2.5)).epsilon(1e-8));
    CHECK(vals[1] == doctest::Approx(fs.value(2, 2.5)).epsilon(1e-8));
  }
  SUBCASE("one-call form solves the adjoint itself") {
    const std::vector<double> vals =
        gt::fundamental_from_adjoint(harmonic(), 0.3, 1.2);
    REQUIRE(vals.size() == 2);
    CHECK(vals[0] == doctest::Approx(std::cos(0.9)).epsilon(1e-8));
    CHECK(vals[1] == doctest::Approx(std::sin(0.9)).epsilon(1e-8));
    // Coincident points give the identity column values.
    const std::vector<double> base =
        gt::fundamental_from_adjoint(harmonic(), 0.7, 0.7);
    CHECK(base[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(base[1] == doctest::Approx(0.0).epsilon(1e-12));
  }
}

TEST_CASE("kernel tables hit exact diagonals") {
  const std::vector<double> grid{0.0, 0.5, 1.0};
  const auto table = gt::kernel_table(harmonic(), grid, grid);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    CHECK(table[i][i] == 0.0);
    for (std::size_t j = 0; j < grid.size(); ++j) {
      CHECK(table[i][j] ==
            doctest::Approx(std::sin(grid[i] - grid[j])).epsilon(1e-9));
    }
  }

  // First-order operator y' = 0: K(x, s) = 1 everywhere.
  const LinearOperator first({CoefficientBundle::constant(0.0, kDom)});
  const auto ones = gt::kernel_table(first, grid, grid);
  for (const auto& row : ones) {
    for (double v : row) CHECK(v == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("solver rejects malformed arguments") {
  const auto rhs = [](double, const double* y, double* dy) { dy[0] = y[0]; };
  CHECK_THROWS_AS(gt::integrate(rhs, 1, 0.0, {1.0, 2.0}, Interval(0.0, 1.0)),
                  gt::ArgumentError);
  CHECK_THROWS_AS(gt::integrate(rhs, 1, 5.0, {1.0}, Interval(0.0, 1.0)),
                  gt::ArgumentError);
  SolveConfig bad;
  bad.rel_tol = 0.0;
  CHECK_THROWS_AS(gt::integrate(rhs, 1, 0.0, {1.0}, Interval(0.0, 1.0), bad),
                  gt::ArgumentError);
  CHECK_THROWS_AS(
      gt::solve_ivp(harmonic(), 0.0, {0.0}, {}, Interval(0.0, 1.0)),
      gt::ArgumentError);
  // Span outside the operator domain.
  CHECK_THROWS_AS(
      gt::fundamental_set(equidimensional(), 1.0, Interval(0.0, 2.0)),
      gt::ArgumentError);
}
