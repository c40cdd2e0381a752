#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gentaylor/catalogue.hpp"
#include "gentaylor/errors.hpp"
#include "gentaylor/expansion.hpp"
#include "gentaylor/expr.hpp"
#include "gentaylor/ode.hpp"
#include "gentaylor/operators.hpp"
#include "gentaylor/problem_file.hpp"
#include "gentaylor/smooth_function.hpp"
#include "gentaylor/verify.hpp"
#include "gentaylor/volterra.hpp"

namespace py = pybind11;

namespace {

gt::LinearOperator build_operator(const std::vector<std::string>& coefficients,
                                  std::pair<double, double> interval) {
  const gt::Interval domain(interval.first, interval.second);
  std::vector<gt::CoefficientBundle> bundles;
  bundles.reserve(coefficients.size());
  for (const std::string& text : coefficients) {
    bundles.push_back(gt::make_coefficient(gt::Expression::parse(text), domain));
  }
  return gt::LinearOperator(std::move(bundles));
}

gt::SmoothFunction function_from_text(const std::string& text) {
  return gt::make_smooth_function(gt::Expression::parse(text), text);
}

py::dict report_to_dict(const gt::ReconstructionReport& r) {
  py::dict d;
  d["initial_data_part"] = r.initial_data_part;
  d["remainder_part"] = r.remainder_part;
  d["total"] = r.total;
  d["reference"] = r.reference_value;
  d["discrepancy"] = r.discrepancy;
  d["quad_error_estimate"] = r.quad_error_estimate;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "generalized Taylor expansions for linear differential operators";

  // Base class first: translators run most-recently-registered first, so the
  // specific input/argument mappings must land after the catch-all.
  py::register_exception<gt::Error>(m, "NumericalError", PyExc_RuntimeError);
  py::register_exception<gt::InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<gt::ArgumentError>(m, "ArgumentError", PyExc_ValueError);

  py::class_<gt::LinearOperator>(m, "Operator",
                                 "y^(n) + a1 y^(n-1) + ... + an y with "
                                 "expression-string coefficients")
      .def(py::init(&build_operator), py::arg("coefficients"), py::arg("interval"))
      .def_property_readonly("order", &gt::LinearOperator::order)
      .def_property_readonly("interval",
                             [](const gt::LinearOperator& op) {
                               return std::make_pair(op.domain().lo,
                                                     op.domain().hi);
                             })
      .def("__repr__", [](const gt::LinearOperator& op) {
        return "<Operator of order " + std::to_string(op.order()) + ">";
      });

  m.def("catalogue_names", [] { return gt::names(); },
        "names of the built-in example problems");

  m.def("catalogue_operator",
        [](const std::string& name) { return gt::get(name).op; },
        py::arg("name"), "the operator behind a catalogue entry");

  m.def(
      "kernel_table",
      [](const gt::LinearOperator& op, const std::vector<double>& xs,
         const std::vector<double>& ss) {
        return gt::kernel_table(op, xs, ss, {});
      },
      py::arg("op"), py::arg("xs"), py::arg("ss"),
      "K(x, s) for every combination of the two grids; K solves the "
      "homogeneous equation in x with unit top derivative at x = s");

  m.def(
      "fundamental_table",
      [](const gt::LinearOperator& op, double x0, const std::vector<double>& xs) {
        double lo = x0;
        double hi = x0;
        for (double x : xs) {
          lo = std::min(lo, x);
          hi = std::max(hi, x);
        }
        const gt::FundamentalSet fs =
            gt::fundamental_set(op, x0, gt::Interval(lo, hi));
        std::vector<std::vector<double>> rows;
        rows.reserve(xs.size());
        for (double x : xs) {
          std::vector<double> row;
          row.reserve(static_cast<std::size_t>(op.order()));
          for (int i = 1; i <= op.order(); ++i) row.push_back(fs.value(i, x));
          rows.push_back(std::move(row));
        }
        return rows;
      },
      py::arg("op"), py::arg("x0"), py::arg("xs"),
      "rows [y1(x) .. yn(x)] of the solutions with identity data at x0");

  m.def(
      "reconstruct",
      [](const gt::LinearOperator& op, const std::string& function, double x0,
         double x, double quad_tol) {
        return report_to_dict(gt::reconstruct(op, function_from_text(function),
                                              x0, x, gt::KernelPath::automatic,
                                              {}, quad_tol));
      },
      py::arg("op"), py::arg("function"), py::arg("x0"), py::arg("x"),
      py::arg("quad_tol") = 1e-10,
      "rebuild the function from its initial data at x0 plus the kernel "
      "integral of its operator image");

  m.def(
      "classical_taylor",
      [](const std::string& function, int n, double x0, double x,
         double quad_tol) {
        return report_to_dict(
            gt::classical_taylor(function_from_text(function), n, x0, x, quad_tol));
      },
      py::arg("function"), py::arg("n"), py::arg("x0"), py::arg("x"),
      py::arg("quad_tol") = 1e-10,
      "order-n Taylor polynomial plus integral remainder");

  m.def(
      "solve",
      [](const gt::LinearOperator& op, double x0, const std::vector<double>& init,
         const std::string& forcing, const std::vector<double>& xs,
         double quad_tol) {
        const gt::Expression f = gt::Expression::parse(forcing);
        std::vector<double> values;
        values.reserve(xs.size());
        for (const gt::CauchyPoint& p : gt::cauchy_solve_grid(
                 op, x0, init, [f](double s) { return f.value(s); }, xs,
                 gt::KernelPath::automatic, {}, quad_tol)) {
          values.push_back(p.value);
        }
        return values;
      },
      py::arg("op"), py::arg("x0"), py::arg("init"), py::arg("forcing"),
      py::arg("xs"), py::arg("quad_tol") = 1e-10,
      "solution values of the forced equation with the given initial data");

  m.def(
      "solve_memory",
      [](const gt::LinearOperator& op, const std::string& memory_kernel,
         const std::optional<std::string>& forcing, double x0,
         const std::vector<double>& init, double end, int steps) {
        const gt::Expression kernel =
            gt::Expression::parse(memory_kernel, /*allow_t=*/true);
        std::function<double(double)> f;
        if (forcing) {
          const gt::Expression fe = gt::Expression::parse(*forcing);
          f = [fe](double x) { return fe.value(x); };
        }
        const gt::IntegroDifferentialProblem problem{
            op, f, [kernel](double x, double t) { return kernel.value(x, t); },
            x0, init};
        const gt::VolterraProblem reduced =
            gt::reduce(problem, gt::Interval::hull(x0, end));
        const gt::GridSolution via = gt::solve_volterra(reduced, end, steps, false);
        const gt::GridSolution direct =
            gt::solve_ide_direct(problem, end, steps, false);
        py::dict d;
        d["nodes"] = via.nodes;
        d["via_volterra"] = via.values;
        d["direct"] = direct.values;
        return d;
      },
      py::arg("op"), py::arg("memory_kernel"), py::arg("forcing"), py::arg("x0"),
      py::arg("init"), py::arg("end"), py::arg("steps") = 200,
      "march the equation with memory two ways: through the second-kind "
      "integral reduction and by direct history integration");

  m.def(
      "verify",
      [](const std::string& name) {
        std::vector<py::dict> out;
        for (const gt::CheckResult& r : gt::run_checks(gt::get(name))) {
          py::dict d;
          d["name"] = r.name;
          d["residual"] = r.residual;
          d["threshold"] = r.threshold;
          d["passed"] = r.passed;
          out.push_back(std::move(d));
        }
        return out;
      },
      py::arg("name"), "run the invariant checks for a catalogue entry");

  m.def(
      "load_problem",
      [](const std::string& path) {
        const gt::ProblemFile file = gt::load_problem(path);
        py::dict d;
        d["op"] = file.op;
        d["x0"] = file.x0;
        d["init"] = file.init;
        d["has_forcing"] = file.forcing.has_value();
        d["has_memory_kernel"] = file.memory_kernel.has_value();
        d["has_test_function"] = file.test_function.has_value();
        return d;
      },
      py::arg("path"), "parse a JSON problem file into an operator and data");
}
