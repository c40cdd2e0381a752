#include <cmath>

#include "doctest.h"
#include "gentaylor/errors.hpp"
#include "gentaylor/quadrature.hpp"

TEST_CASE("smooth integrand against a hand antiderivative") {
  // d/dx [e^x (sin(1-x) + cos(1-x))] = 2 e^x sin(1-x), so the integral over
  // [0, 1] is e - sin(1) - cos(1).
  const auto f = [](double x) { return std::sin(1.0 - x) * 2.0 * std::exp(x); };
  const gt::QuadResult r = gt::integrate_adaptive(f, 0.0, 1.0, 1e-12);
  const double exact = std::exp(1.0) - std::sin(1.0) - std::cos(1.0);
  CHECK(exact == doctest::Approx(1.3365085377830087).epsilon(1e-15));
  CHECK(r.value == doctest::Approx(exact).epsilon(1e-12));
  CHECK(r.error_estimate <= 1e-12 * std::max(1.0, std::abs(r.value)));
  CHECK(r.evaluations >= 15);
}

TEST_CASE("orientation flips the sign") {
  const auto f = [](double x) { return x * x; };
  const gt::QuadResult fwd = gt::integrate_adaptive(f, 0.0, 2.0, 1e-12);
  const gt::QuadResult rev = gt::integrate_adaptive(f, 2.0, 0.0, 1e-12);
  CHECK(fwd.value == doctest::Approx(8.0 / 3.0).epsilon(1e-13));
  CHECK(rev.value == doctest::Approx(-8.0 / 3.0).epsilon(1e-13));
}

TEST_CASE("empty range costs nothing") {
  int calls = 0;
  const auto f = [&calls](double) { ++calls; return 1.0; };
  const gt::QuadResult r = gt::integrate_adaptive(f, 1.5, 1.5, 1e-12);
  CHECK(r.value == 0.0);
  CHECK(r.evaluations == 0);
  CHECK(calls == 0);
}

TEST_CASE("low-degree polynomials finish in one panel") {
  const auto f = [](double x) { return std::pow(x, 9); };
  const gt::QuadResult r = gt::integrate_adaptive(f, 0.0, 1.0, 1e-12);
  CHECK(r.value == doctest::Approx(0.1).epsilon(1e-14));
  CHECK(r.evaluations == 15);
}

TEST_CASE("oscillatory integrand over a full period") {
  const gt::QuadResult r =
      gt::integrate_adaptive([](double x) { return std::sin(x); }, 0.0,
                             2.0 * 3.14159265358979323846, 1e-12);
  CHECK(std::abs(r.value) < 1e-12);
}

TEST_CASE("panel budget exhaustion reports the best value") {
  // A kink keeps the nested rule from converging fast.
  const auto f = [](double x) { return std::abs(x - 1.0 / 3.0); };
  try {
    gt::integrate_adaptive(f, 0.0, 1.0, 1e-15, /*max_panels=*/8);
    FAIL("expected AccuracyError");
  } catch (const gt::AccuracyError& e) {
    CHECK(std::isfinite(e.best_value));
    CHECK(e.best_value == doctest::Approx(5.0 / 18.0).epsilon(1e-3));
    CHECK(e.error_estimate > 0.0);
  }
}

TEST_CASE("argument validation") {
  const auto f = [](double) { return 1.0; };
  CHECK_THROWS_AS(gt::integrate_adaptive(f, 0.0, 1.0, 0.0), gt::ArgumentError);
  CHECK_THROWS_AS(gt::integrate_adaptive(f, 0.0, 1.0, -1e-8), gt::ArgumentError);
  CHECK_THROWS_AS(gt::integrate_adaptive(f, 0.0, 1.0, 1e-8, 0), gt::ArgumentError);
  const auto bad = [](double) { return std::nan(""); };
  CHECK_THROWS_AS(gt::integrate_adaptive(bad, 0.0, 1.0, 1e-8), gt::EvaluationError);
}
