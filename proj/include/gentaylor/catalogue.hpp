#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gentaylor/operators.hpp"
#include "gentaylor/smooth_function.hpp"
#include "gentaylor/volterra.hpp"

namespace gt {

/// Closed-form reference material for a built-in operator. Each member is a
/// factory: fixing the free parameter yields a SmoothFunction with exact
/// jets, suitable as an oracle for the numerically computed object.
struct ClosedForms {
  /// x -> K(x, s) for a fixed source s.
  std::function<SmoothFunction(double s)> kernel_in_x;
  /// s -> phi(x, s) for a fixed observation point x.
  std::function<SmoothFunction(double x)> phi_in_s;
  /// x -> y_i(x), the i-th fundamental solution about x0 (i = 1..n).
  std::function<SmoothFunction(double x0, int i)> fundamental;
};

/// An integro-differential problem paired with its exact solution.
struct MemoryProblem {
  IntegroDifferentialProblem problem;
  SmoothFunction solution;
};

/// A built-in example: operator, closed forms when known, a spread of test
/// functions for the reconstruction identity, and optionally a solved
/// problem with a memory term.
struct NamedProblem {
  std::string name;
  std::string description;
  LinearOperator op;
  std::optional<ClosedForms> closed_forms;
  std::vector<SmoothFunction> test_functions;
  std::optional<MemoryProblem> ide;
};

/// The names enumerated by the command-line tool. get() additionally accepts
/// pure_derivative_k for any k up to the operator order cap.
const std::vector<std::string>& names();

/// Build a catalogue entry. Before returning, the closed forms are checked
/// against their defining jet conditions and their differential equations at
/// sampled points; a failure means the library itself is broken and raises
/// Error. Unknown names raise InputError listing the available choices.
NamedProblem get(const std::string& name);

}  // namespace gt
