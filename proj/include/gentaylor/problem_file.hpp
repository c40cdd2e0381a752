#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gentaylor/expr.hpp"
#include "gentaylor/ode.hpp"
#include "gentaylor/operators.hpp"

namespace gt {

/// A problem definition read from a JSON document. Keys:
///   order         required  integer 1..12
///   interval      required  [a, b] with a < b
///   coefficients  required  list of order expression strings, a_1 first
///   x0            required  number inside interval
///   forcing       optional  expression string f(x)
///   memory_kernel optional  expression string N(x, t) (may use t)
///   test_function optional  expression string
///   init          optional  list of order numbers y(x0), y'(x0), ...
///   tolerances    optional  object {rtol, atol, qtol}, each optional
/// Unknown keys are rejected. All messages carry the originating file and
/// the JSON path of the offending entry.
struct ProblemFile {
  LinearOperator op;
  std::optional<Expression> forcing;
  std::optional<Expression> memory_kernel;
  std::optional<Expression> test_function;
  double x0 = 0.0;
  std::vector<double> init;
  SolveConfig solve;
  double quad_tol = 1e-10;
};

/// Parse a problem from JSON text; origin names the source in messages.
ProblemFile parse_problem(const std::string& text, const std::string& origin);

/// Read and parse a problem file from disk.
ProblemFile load_problem(const std::string& path);

}  // namespace gt
