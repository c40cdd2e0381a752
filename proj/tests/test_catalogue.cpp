#include <cmath>
#include <string>
#include <vector>

#include "doctest.h"
#include "gentaylor/catalogue.hpp"
#include "gentaylor/errors.hpp"
#include "gentaylor/ode.hpp"
#include "gentaylor/quadrature.hpp"

TEST_CASE("every advertised name loads and passes its self-checks") {
  for (const std::string& name : gt::names()) {
    const gt::NamedProblem entry = gt::get(name);
    CHECK(entry.name == name);
    CHECK_FALSE(entry.description.empty());
    CHECK(entry.test_functions.size() == 4);
  }
}

TEST_CASE("lookup accepts any supported pure-derivative order") {
  const gt::NamedProblem p7 = gt::get("pure_derivative_7");
  CHECK(p7.op.order() == 7);
  CHECK(p7.closed_forms.has_value());

  CHECK_THROWS_AS(gt::get("pure_derivative_0"), gt::InputError);
  CHECK_THROWS_AS(gt::get("pure_derivative_13"), gt::InputError);
  CHECK_THROWS_AS(gt::get("pure_derivative_"), gt::InputError);
  try {
    gt::get("no_such_thing");
    FAIL("lookup should have thrown");
  } catch (const gt::InputError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("harmonic") != std::string::npos);
    CHECK(msg.find("quartic") != std::string::npos);
  }
}

TEST_CASE("closed forms evaluate to their textbook values") {
  const gt::NamedProblem harmonic = gt::get("harmonic");
  CHECK(harmonic.op.order() == 2);
  CHECK(harmonic.closed_forms->kernel_in_x(0.3).value(1.2) ==
        doctest::Approx(std::sin(0.9)).epsilon(1e-14));
  CHECK(harmonic.closed_forms->phi_in_s(1.2).value(0.3) ==
        doctest::Approx(-std::sin(0.9)).epsilon(1e-14));
  CHECK(harmonic.closed_forms->fundamental(0.5, 1).value(2.0) ==
        doctest::Approx(std::cos(1.5)).epsilon(1e-14));

  const gt::NamedProblem hyperbolic = gt::get("hyperbolic");
  CHECK(hyperbolic.closed_forms->kernel_in_x(0.0).value(1.0) ==
        doctest::Approx(std::sinh(1.0)).epsilon(1e-14));
  CHECK(hyperbolic.closed_forms->fundamental(0.0, 2).value(-0.7) ==
        doctest::Approx(std::sinh(-0.7)).epsilon(1e-14));

  const gt::NamedProblem quartic = gt::get("quartic");
  const double u = 1.1;
  CHECK(quartic.closed_forms->kernel_in_x(0.0).value(u) ==
        doctest::Approx((2.0 * std::sin(u) - std::sin(2.0 * u)) / 6.0)
            .epsilon(1e-14));
  // A kernel zero: u = pi makes both frequencies vanish.
  CHECK(std::abs(quartic.closed_forms->kernel_in_x(0.0).value(std::acos(-1.0))) <
        1e-14);
  CHECK(quartic.closed_forms->fundamental(0.0, 3).value(u) ==
        doctest::Approx((std::cos(u) - std::cos(2.0 * u)) / 3.0).epsilon(1e-14));
}

TEST_CASE("closed forms agree with the numerically computed objects") {
  for (const std::string& name : {"harmonic", "hyperbolic", "quartic"}) {
    const gt::NamedProblem entry = gt::get(name);
    const gt::Interval span(-2.0, 3.0);

    const gt::KernelSlice slice = gt::cauchy_kernel(entry.op, 0.4, span);
    const gt::SmoothFunction exact = entry.closed_forms->kernel_in_x(0.4);
    for (double x : {-1.5, 0.4, 1.0, 2.8}) {
      CHECK(slice.value(x) == doctest::Approx(exact.value(x)).epsilon(1e-8));
    }

    const gt::FundamentalSet fs = gt::fundamental_set(entry.op, 0.4, span);
    for (int i = 1; i <= entry.op.order(); ++i) {
      const gt::SmoothFunction yi = entry.closed_forms->fundamental(0.4, i);
      CHECK(fs.value(i, 2.2) == doctest::Approx(yi.value(2.2)).epsilon(1e-8));
    }
  }
}

TEST_CASE("the last test function of each entry solves the homogeneous equation") {
  for (const std::string& name : gt::names()) {
    const gt::NamedProblem entry = gt::get(name);
    const gt::SmoothFunction& f = entry.test_functions.back();
    for (double x : {-1.3, 0.2, 1.9}) {
      CHECK(std::abs(gt::apply_forward(entry.op, f.jet(x, entry.op.order()))) <
            1e-12);
    }
  }
}

TEST_CASE("memory problems are consistent with their stated solutions") {
  for (const std::string& name : {"cosh_ide", "harmonic_ide"}) {
    const gt::NamedProblem entry = gt::get(name);
    REQUIRE(entry.ide.has_value());
    const gt::IntegroDifferentialProblem& p = entry.ide->problem;
    const gt::SmoothFunction& sol = entry.ide->solution;

    // Initial data equals the solution jet at the base point.
    const int n = p.op.order();
    for (int i = 0; i < n; ++i) {
      CHECK(p.init[static_cast<std::size_t>(i)] == sol.derivative(p.x0, i));
    }

    // F(sol)(x) = f(x) + integral of the memory term, checked by quadrature.
    for (double x : {0.6, 1.4}) {
      const double lhs = gt::apply_forward(p.op, sol.jet(x, n));
      const double integral =
          gt::integrate_adaptive(
              [&](double t) { return p.memory_kernel(x, t) * sol.value(t); },
              p.x0, x, 1e-12)
              .value;
      const double rhs = (p.forcing ? p.forcing(x) : 0.0) + integral;
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
    }
  }
}

TEST_CASE("catalogue memory problems solve to their closed forms") {
  const gt::NamedProblem entry = gt::get("harmonic_ide");
  const gt::GridSolution direct =
      gt::solve_ide_direct(entry.ide->problem, 2.0, 400, false);
  double worst = 0.0;
  for (std::size_t i = 0; i < direct.nodes.size(); ++i) {
    worst = std::max(worst,
                     std::abs(direct.values[i] - std::cos(direct.nodes[i])));
  }
  CHECK(worst < 1e-3);
}
