#include "gentaylor/catalogue.hpp"

#include <cctype>
#include <cmath>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "gentaylor/errors.hpp"
#include "gentaylor/expr.hpp"

namespace gt {
namespace {

const Interval kDomain{-8.0, 8.0};

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= static_cast<double>(i);
  return f;
}

LinearOperator constant_op(const std::vector<double>& coeffs) {
  std::vector<CoefficientBundle> cs;
  cs.reserve(coeffs.size());
  for (double c : coeffs) cs.push_back(CoefficientBundle::constant(c, kDomain));
  return LinearOperator(std::move(cs));
}

SmoothFunction from_text(const std::string& text) {
  return make_smooth_function(Expression::parse(text), text);
}

// f(c1 * x + c0)
Expression wave(Expression::Func f, double c1, double c0) {
  return Expression::apply(f, Expression::affine(c1, c0));
}

ClosedForms harmonic_forms() {
  using F = Expression::Func;
  ClosedForms forms;
  forms.kernel_in_x = [](double s) {
    return make_smooth_function(wave(F::sin, 1.0, -s), "sin(x - s)");
  };
  // phi(x, s) = -sin(x - s) = sin(s - x), here as a function of s.
  forms.phi_in_s = [](double x) {
    return make_smooth_function(wave(F::sin, 1.0, -x), "-sin(x - s)");
  };
  forms.fundamental = [](double x0, int i) {
    if (i == 1) return make_smooth_function(wave(F::cos, 1.0, -x0), "cos(x - x0)");
    if (i == 2) return make_smooth_function(wave(F::sin, 1.0, -x0), "sin(x - x0)");
    throw ArgumentError("harmonic operator has two fundamental solutions");
  };
  return forms;
}

ClosedForms hyperbolic_forms() {
  using F = Expression::Func;
  ClosedForms forms;
  forms.kernel_in_x = [](double s) {
    return make_smooth_function(wave(F::sinh, 1.0, -s), "sinh(x - s)");
  };
  // phi(x, s) = -sinh(x - s) = sinh(s - x), here as a function of s.
  forms.phi_in_s = [](double x) {
    return make_smooth_function(wave(F::sinh, 1.0, -x), "-sinh(x - s)");
  };
  forms.fundamental = [](double x0, int i) {
    if (i == 1) return make_smooth_function(wave(F::cosh, 1.0, -x0), "cosh(x - x0)");
    if (i == 2) return make_smooth_function(wave(F::sinh, 1.0, -x0), "sinh(x - x0)");
    throw ArgumentError("hyperbolic operator has two fundamental solutions");
  };
  return forms;
}

ClosedForms quartic_forms() {
  using F = Expression::Func;
  ClosedForms forms;
  forms.kernel_in_x = [](double s) {
    const Expression e =
        (wave(F::sin, 1.0, -s).scaled(2.0) - wave(F::sin, 2.0, -2.0 * s))
            .scaled(1.0 / 6.0);
    return make_smooth_function(e, "(2*sin(x-s) - sin(2*(x-s)))/6");
  };
  // phi(x, s) = (sin 2(x-s) - 2 sin(x-s))/6, here as a function of s.
  forms.phi_in_s = [](double x) {
    const Expression e =
        (wave(F::sin, -2.0, 2.0 * x) - wave(F::sin, -1.0, x).scaled(2.0))
            .scaled(1.0 / 6.0);
    return make_smooth_function(e, "(sin(2*(x-s)) - 2*sin(x-s))/6");
  };
  forms.fundamental = [](double x0, int i) {
    const Expression one = wave(F::cos, 1.0, -x0);
    const Expression two = wave(F::cos, 2.0, -2.0 * x0);
    const Expression sone = wave(F::sin, 1.0, -x0);
    const Expression stwo = wave(F::sin, 2.0, -2.0 * x0);
    switch (i) {
      case 1:
        return make_smooth_function((one.scaled(4.0) - two).scaled(1.0 / 3.0),
                                    "(4*cos(x-x0) - cos(2*(x-x0)))/3");
      case 2:
        return make_smooth_function((sone.scaled(8.0) - stwo).scaled(1.0 / 6.0),
                                    "(8*sin(x-x0) - sin(2*(x-x0)))/6");
      case 3:
        return make_smooth_function((one - two).scaled(1.0 / 3.0),
                                    "(cos(x-x0) - cos(2*(x-x0)))/3");
      case 4:
        return make_smooth_function((sone.scaled(2.0) - stwo).scaled(1.0 / 6.0),
                                    "(2*sin(x-x0) - sin(2*(x-x0)))/6");
      default:
        throw ArgumentError("quartic operator has four fundamental solutions");
    }
  };
  return forms;
}

ClosedForms pure_forms(int n) {
  ClosedForms forms;
  forms.kernel_in_x = [n](double s) {
    return make_smooth_function(
        Expression::affine(1.0, -s).pow(n - 1).scaled(1.0 / factorial(n - 1)),
        "(x-s)^" + std::to_string(n - 1) + "/" + std::to_string(n - 1) + "!");
  };
  // phi(x, s) = (-1)^(n-1) (x-s)^(n-1)/(n-1)! = (s-x)^(n-1)/(n-1)!.
  forms.phi_in_s = [n](double x) {
    return make_smooth_function(
        Expression::affine(1.0, -x).pow(n - 1).scaled(1.0 / factorial(n - 1)),
        "(s-x)^" + std::to_string(n - 1) + "/" + std::to_string(n - 1) + "!");
  };
  forms.fundamental = [n](double x0, int i) {
    if (i < 1 || i > n) {
      throw ArgumentError("fundamental-solution index out of range");
    }
    return make_smooth_function(
        Expression::affine(1.0, -x0).pow(i - 1).scaled(1.0 / factorial(i - 1)),
        "(x-x0)^" + std::to_string(i - 1) + "/" + std::to_string(i - 1) + "!");
  };
  return forms;
}

std::vector<SmoothFunction> standard_test_functions(const std::string& homogeneous) {
  return {from_text("exp(x)"), from_text("sin(1.7*x)"),
          from_text("x^5 - x^2 + 3"), from_text(homogeneous)};
}

void require(bool ok, const std::string& name, const std::string& what) {
  if (!ok) {
    throw Error("catalogue self-check failed for '" + name + "': " + what);
  }
}

// Spot-check the closed forms: defining jets at random base points, then the
// differential equations themselves at sampled points. Pure evaluations with
// a fixed seed; a failure here means the library build is broken.
void check_closed_forms(const std::string& name, const LinearOperator& op,
                        const ClosedForms& forms) {
  const int n = op.order();
  std::mt19937 rng(8572u);
  std::uniform_real_distribution<double> pick(-6.0, 6.0);

  const double jet_tol = 1e-12;
  for (int trial = 0; trial < 5; ++trial) {
    const double s = pick(rng);
    const Jet kernel_jet = forms.kernel_in_x(s).jet(s, n - 1);
    for (int j = 0; j < n; ++j) {
      const double want = (j == n - 1) ? 1.0 : 0.0;
      require(std::abs(kernel_jet[j] - want) <= jet_tol, name,
              "kernel jet at its source");
    }

    const double x = pick(rng);
    const Jet phi_jet = forms.phi_in_s(x).jet(x, n - 1);
    for (int j = 0; j < n; ++j) {
      const double want = (j == n - 1) ? 1.0 : 0.0;
      require(std::abs(phi_jet[j] - want) <= jet_tol, name,
              "dual-solution jet at the observation point");
    }

    const double x0 = pick(rng);
    for (int i = 1; i <= n; ++i) {
      const Jet f_jet = forms.fundamental(x0, i).jet(x0, n - 1);
      for (int j = 0; j < n; ++j) {
        const double want = (j == i - 1) ? 1.0 : 0.0;
        require(std::abs(f_jet[j] - want) <= jet_tol, name,
                "fundamental-solution jet at the base point");
      }
    }
  }

  const double ode_tol = 1e-10;
  for (int trial = 0; trial < 20; ++trial) {
    const double s = pick(rng);
    const double x = pick(rng);
    require(std::abs(apply_forward(op, forms.kernel_in_x(s).jet(x, n))) <= ode_tol,
            name, "kernel solves the homogeneous equation");
    require(std::abs(apply_adjoint(op, forms.phi_in_s(x).jet(s, n))) <= ode_tol,
            name, "dual solution solves the adjoint equation");
    const int i = 1 + trial % n;
    require(std::abs(apply_forward(op, forms.fundamental(s, i).jet(x, n))) <= ode_tol,
            name, "fundamental solutions solve the homogeneous equation");
  }
}

NamedProblem harmonic_entry() {
  return NamedProblem{"harmonic",
                      "y'' + y: kernel sin(x - s), fundamental pair cos/sin",
                      constant_op({0.0, 1.0}),
                      harmonic_forms(),
                      standard_test_functions("cos(x)"),
                      {}};
}

NamedProblem hyperbolic_entry() {
  return NamedProblem{"hyperbolic",
                      "y'' - y: kernel sinh(x - s), fundamental pair cosh/sinh",
                      constant_op({0.0, -1.0}),
                      hyperbolic_forms(),
                      standard_test_functions("cosh(x)"),
                      {}};
}

NamedProblem quartic_entry() {
  return NamedProblem{"quartic",
                      "y'''' + 5y'' + 4y: two-frequency trigonometric closed forms",
                      constant_op({0.0, 5.0, 0.0, 4.0}),
                      quartic_forms(),
                      standard_test_functions("sin(2*x)"),
                      {}};
}

NamedProblem pure_entry(int n) {
  const std::string homogeneous =
      (n == 1) ? std::string("1") : "x^" + std::to_string(n - 1);
  return NamedProblem{"pure_derivative_" + std::to_string(n),
                      "y^(" + std::to_string(n) +
                          "): the expansion is the classical Taylor formula",
                      constant_op(std::vector<double>(static_cast<std::size_t>(n), 0.0)),
                      pure_forms(n),
                      standard_test_functions(homogeneous),
                      {}};
}

NamedProblem cosh_ide_entry() {
  NamedProblem entry = pure_entry(1);
  entry.name = "cosh_ide";
  entry.description = "y' = integral of y with unit memory; solution cosh x";
  entry.ide = MemoryProblem{
      IntegroDifferentialProblem{entry.op,
                                 {},
                                 [](double, double) { return 1.0; },
                                 0.0,
                                 {1.0}},
      from_text("cosh(x)")};
  return entry;
}

NamedProblem harmonic_ide_entry() {
  NamedProblem entry = harmonic_entry();
  entry.name = "harmonic_ide";
  entry.description =
      "y'' + y = -sin x + integral of y with unit memory; solution cos x";
  entry.ide = MemoryProblem{
      IntegroDifferentialProblem{entry.op,
                                 [](double x) { return -std::sin(x); },
                                 [](double, double) { return 1.0; },
                                 0.0,
                                 {1.0, 0.0}},
      from_text("cos(x)")};
  return entry;
}

NamedProblem build(const std::string& name) {
  if (name == "harmonic") return harmonic_entry();
  if (name == "hyperbolic") return hyperbolic_entry();
  if (name == "quartic") return quartic_entry();
  if (name == "cosh_ide") return cosh_ide_entry();
  if (name == "harmonic_ide") return harmonic_ide_entry();

  const std::string prefix = "pure_derivative_";
  if (name.size() > prefix.size() && name.compare(0, prefix.size(), prefix) == 0) {
    const std::string suffix = name.substr(prefix.size());
    bool digits = !suffix.empty() && suffix.size() <= 2;
    for (char c : suffix) {
      digits = digits && std::isdigit(static_cast<unsigned char>(c)) != 0;
    }
    if (digits) {
      const int n = std::stoi(suffix);
      if (n >= 1 && n <= kMaxOperatorOrder) return pure_entry(n);
    }
  }

  std::string known;
  for (const std::string& candidate : names()) {
    if (!known.empty()) known += ", ";
    known += candidate;
  }
  throw InputError("unknown catalogue name '" + name + "'; available: " + known);
}

}  // namespace

const std::vector<std::string>& names() {
  static const std::vector<std::string> kNames = {
      "harmonic",          "hyperbolic",        "quartic",
      "pure_derivative_1", "pure_derivative_2", "pure_derivative_3",
      "pure_derivative_4", "cosh_ide",          "harmonic_ide"};
  return kNames;
}

NamedProblem get(const std::string& name) {
  NamedProblem entry = build(name);
  if (entry.closed_forms) {
    check_closed_forms(entry.name, entry.op, *entry.closed_forms);
  }
  return entry;
}

}  // namespace gt
