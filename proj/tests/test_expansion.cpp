#include <cmath>
#include <vector>

#include "doctest.h"
#include "gentaylor/errors.hpp"
#include "gentaylor/expansion.hpp"
#include "gentaylor/expr.hpp"

using gt::CoefficientBundle;
using gt::Interval;
using gt::KernelPath;
using gt::LinearOperator;

namespace {

const Interval kDom{-10.0, 10.0};

LinearOperator harmonic() {
  return LinearOperator({CoefficientBundle::constant(0.0, kDom),
                         CoefficientBundle::constant(1.0, kDom)});
}

// y^(n) alone.
LinearOperator pure_derivative(int n) {
  std::vector<CoefficientBundle> cs(static_cast<std::size_t>(n),
                                    CoefficientBundle::constant(0.0, kDom));
  return LinearOperator(std::move(cs));
}

}  // namespace

TEST_CASE("expanding exp with the harmonic operator") {
  const gt::SmoothFunction f =
      gt::make_smooth_function(gt::Expression::parse("exp(x)"), "exp");
  const gt::ReconstructionReport r = gt::reconstruct(harmonic(), f, 0.0, 1.0);

  // Initial part cos(1) + sin(1); remainder integral e - sin(1) - cos(1).
  CHECK(r.initial_data_part ==
        doctest::Approx(std::cos(1.0) + std::sin(1.0)).epsilon(1e-9));
  CHECK(r.remainder_part == doctest::Approx(1.3365085377830087).epsilon(1e-9));
  CHECK(r.total == doctest::Approx(std::exp(1.0)).epsilon(1e-9));
  CHECK(r.reference_value == std::exp(1.0));
  CHECK(r.discrepancy < 1e-9);
  CHECK(r.path_used == KernelPath::adjoint);
  CHECK_FALSE(r.coefficient_fallback_used);
}

TEST_CASE("expansion at the base point is the identity") {
  const gt::SmoothFunction f =
      gt::make_smooth_function(gt::Expression::parse("sin(x) + x^2"), "f");
  const gt::ReconstructionReport r = gt::reconstruct(harmonic(), f, 0.7, 0.7);
  CHECK(r.remainder_part == 0.0);
  CHECK(r.total == doctest::Approx(f.value(0.7)).epsilon(1e-12));
}

TEST_CASE("the two kernel paths agree") {
  const gt::SmoothFunction f =
      gt::make_smooth_function(gt::Expression::parse("exp(x/2)*cos(x)"), "f");
  const gt::ReconstructionReport a =
      gt::reconstruct(harmonic(), f, 0.2, 1.7, KernelPath::adjoint);
  const gt::ReconstructionReport b =
      gt::reconstruct(harmonic(), f, 0.2, 1.7, KernelPath::forward);
  CHECK(a.total == doctest::Approx(b.total).epsilon(1e-8));
  CHECK(a.discrepancy < 1e-8);
  CHECK(b.discrepancy < 1e-7);
}

TEST_CASE("expansion to the left of the base point") {
  const gt::SmoothFunction f =
      gt::make_smooth_function(gt::Expression::parse("cosh(x)"), "f");
  const gt::ReconstructionReport r = gt::reconstruct(harmonic(), f, 1.0, -0.5);
  CHECK(r.total == doctest::Approx(std::cosh(-0.5)).epsilon(1e-9));
  CHECK(r.discrepancy < 1e-8);
}

TEST_CASE("pure derivative operators degenerate to the classical formula") {
  const gt::SmoothFunction cubic =
      gt::make_smooth_function(gt::Expression::parse("x^3"), "cubic");
  const gt::ReconstructionReport t = gt::classical_taylor(cubic, 3, 0.0, 2.0);
  CHECK(t.initial_data_part == 0.0);
  CHECK(t.remainder_part == doctest::Approx(8.0).epsilon(1e-10));
  CHECK(t.total == doctest::Approx(8.0).epsilon(1e-10));
  CHECK(t.reference_value == 8.0);
  CHECK(t.discrepancy < 1e-10);

  const gt::ReconstructionReport r =
      gt::reconstruct(pure_derivative(3), cubic, 0.0, 2.0);
  CHECK(r.initial_data_part == doctest::Approx(t.initial_data_part).epsilon(1e-9));
  CHECK(r.remainder_part == doctest::Approx(t.remainder_part).epsilon(1e-9));
  CHECK(r.total == doctest::Approx(t.total).epsilon(1e-9));
}

TEST_CASE("classical formula on a transcendental function") {
  const gt::SmoothFunction f =
      gt::make_smooth_function(gt::Expression::parse("sin(x)"), "sin");
  for (int n : {1, 2, 3, 4, 6}) {
    const gt::ReconstructionReport t = gt::classical_taylor(f, n, 0.3, 1.1);
    CHECK(t.total == doctest::Approx(std::sin(1.1)).epsilon(1e-10));
    CHECK(t.discrepancy < 1e-10);
  }
  CHECK_THROWS_AS(gt::classical_taylor(f, 0, 0.0, 1.0), gt::ArgumentError);
}

TEST_CASE("polynomials below the expansion order have no remainder") {
  const gt::SmoothFunction q = gt::make_smooth_function(
      gt::Expression::parse("3*x^2 - 2*x + 1/2"), "quadratic");
  const gt::ReconstructionReport t = gt::classical_taylor(q, 3, -0.7, 1.9);
  CHECK(std::abs(t.remainder_part) <= 1e-13);
  CHECK(t.discrepancy < 1e-12);
}

TEST_CASE("fallback coefficients still reconstruct") {
  // a_1 has no closed-form derivative; the adjoint path differentiates it
  // by finite differences.
  const LinearOperator op(
      {CoefficientBundle::value_only([](double x) { return std::tanh(x); }, kDom),
       CoefficientBundle::constant(1.0, kDom)});
  const gt::SmoothFunction f =
      gt::make_smooth_function(gt::Expression::parse("exp(x/2)"), "f");
  const gt::ReconstructionReport r = gt::reconstruct(op, f, 0.0, 1.2);
  CHECK(r.path_used == KernelPath::adjoint);
  CHECK(r.coefficient_fallback_used);
  CHECK(r.discrepancy < 1e-6);
}

TEST_CASE("blocked adjoint falls back to forward solves") {
  const LinearOperator op(
      {CoefficientBundle::value_only([](double x) { return std::tanh(x); }, kDom,
                                     /*enable_fallback=*/false),
       CoefficientBundle::constant(1.0, kDom)});
  const gt::SmoothFunction f =
      gt::make_smooth_function(gt::Expression::parse("x^2 + 1"), "f");

  const gt::ReconstructionReport r = gt::reconstruct(op, f, 0.0, 0.8);
  CHECK(r.path_used == KernelPath::forward);
  CHECK(r.discrepancy < 1e-7);

  CHECK_THROWS_AS(gt::reconstruct(op, f, 0.0, 0.8, KernelPath::adjoint),
                  gt::CapabilityError);
}

TEST_CASE("nonhomogeneous solve via the kernel integral") {
  // y'' + y = 1 with zero data: y = 1 - cos(x).
  const auto one = [](double) { return 1.0; };
  const gt::CauchyPoint p =
      gt::cauchy_solve(harmonic(), 0.0, {0.0, 0.0}, one, 1.5707963267948966);
  CHECK(p.homogeneous_part == 0.0);
  CHECK(p.value == doctest::Approx(1.0).epsilon(1e-9));

  // Nonzero initial data adds 2 cos(x) + 3 sin(x).
  const gt::CauchyPoint q =
      gt::cauchy_solve(harmonic(), 0.0, {2.0, 3.0}, one, 2.2);
  const double expect = 1.0 - std::cos(2.2) + 2.0 * std::cos(2.2) + 3.0 * std::sin(2.2);
  CHECK(q.value == doctest::Approx(expect).epsilon(1e-9));
}

TEST_CASE("kernel-assembled solution matches a direct forced solve") {
  const auto forcing = [](double x) { return std::exp(-x) * std::cos(2.0 * x); };
  const std::vector<double> init{0.3, -1.1};
  const gt::Trajectory direct = gt::solve_ivp(harmonic(), 0.5, init, forcing,
                                              Interval(0.5, 3.0));
  const std::vector<double> grid{0.9, 1.6, 2.4, 3.0};
  const std::vector<gt::CauchyPoint> pts =
      gt::cauchy_solve_grid(harmonic(), 0.5, init, forcing, grid);
  REQUIRE(pts.size() == grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    CHECK(pts[i].x == grid[i]);
    CHECK(pts[i].value ==
          doctest::Approx(direct.component(grid[i], 0)).epsilon(1e-8));
  }
}
