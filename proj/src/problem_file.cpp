#include "gentaylor/problem_file.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <utility>

#include "gentaylor/errors.hpp"
#include "json.hpp"

namespace gt {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& origin, const std::string& message) {
  throw InputError(origin + ": " + message);
}

std::pair<int, int> line_and_column(const std::string& text, std::size_t byte) {
  int line = 1;
  int column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

double require_number(const json& v, const std::string& origin,
                      const std::string& path) {
  if (!v.is_number()) fail(origin, path + ": expected a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) fail(origin, path + ": number must be finite");
  return d;
}

Expression require_expression(const json& v, const std::string& origin,
                              const std::string& path, bool allow_t) {
  if (!v.is_string()) fail(origin, path + ": expected an expression string");
  try {
    return Expression::parse(v.get<std::string>(), allow_t);
  } catch (const InputError& e) {
    fail(origin, path + ": " + e.what());
  }
}

}  // namespace

ProblemFile parse_problem(const std::string& text, const std::string& origin) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, column] = line_and_column(text, e.byte > 0 ? e.byte - 1 : 0);
    fail(origin, "JSON syntax error at line " + std::to_string(line) +
                     ", column " + std::to_string(column));
  }
  if (!doc.is_object()) fail(origin, "top level must be a JSON object");

  static const std::set<std::string> kKnown = {
      "order",  "interval", "coefficients",  "forcing",    "memory_kernel",
      "test_function", "x0", "init", "tolerances"};
  for (const auto& item : doc.items()) {
    if (kKnown.count(item.key()) == 0) {
      fail(origin, "unknown key '" + item.key() + "'");
    }
  }
  for (const char* key : {"order", "interval", "coefficients", "x0"}) {
    if (!doc.contains(key)) fail(origin, std::string("missing key '") + key + "'");
  }

  if (!doc["order"].is_number_integer()) fail(origin, "order: expected an integer");
  const int order = doc["order"].get<int>();
  if (order < 1 || order > kMaxOperatorOrder) {
    fail(origin, "order: must be in 1.." + std::to_string(kMaxOperatorOrder));
  }

  const json& iv = doc["interval"];
  if (!iv.is_array() || iv.size() != 2) {
    fail(origin, "interval: expected [a, b]");
  }
  const double lo = require_number(iv[0], origin, "interval[0]");
  const double hi = require_number(iv[1], origin, "interval[1]");
  if (!(lo < hi)) fail(origin, "interval: endpoints must satisfy a < b");
  const Interval domain(lo, hi);

  const json& coeffs = doc["coefficients"];
  if (!coeffs.is_array() || static_cast<int>(coeffs.size()) != order) {
    fail(origin, "coefficients: expected a list of " + std::to_string(order) +
                     " expression strings");
  }
  std::vector<CoefficientBundle> bundles;
  bundles.reserve(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const Expression e = require_expression(
        coeffs[i], origin, "coefficients[" + std::to_string(i) + "]",
        /*allow_t=*/false);
    bundles.push_back(make_coefficient(e, domain));
  }

  const double x0 = require_number(doc["x0"], origin, "x0");
  if (!domain.contains(x0)) fail(origin, "x0: must lie inside interval");

  ProblemFile out{LinearOperator(std::move(bundles)), {}, {}, {}, x0, {}, {}, 1e-10};

  if (doc.contains("forcing")) {
    out.forcing = require_expression(doc["forcing"], origin, "forcing", false);
  }
  if (doc.contains("memory_kernel")) {
    out.memory_kernel =
        require_expression(doc["memory_kernel"], origin, "memory_kernel", true);
  }
  if (doc.contains("test_function")) {
    out.test_function =
        require_expression(doc["test_function"], origin, "test_function", false);
  }

  if (doc.contains("init")) {
    const json& init = doc["init"];
    if (!init.is_array() || static_cast<int>(init.size()) != order) {
      fail(origin, "init: expected a list of " + std::to_string(order) + " numbers");
    }
    for (std::size_t i = 0; i < init.size(); ++i) {
      out.init.push_back(
          require_number(init[i], origin, "init[" + std::to_string(i) + "]"));
    }
  }

  if (doc.contains("tolerances")) {
    const json& tols = doc["tolerances"];
    if (!tols.is_object()) fail(origin, "tolerances: expected an object");
    for (const auto& item : tols.items()) {
      const std::string path = "tolerances." + item.key();
      const double v = require_number(item.value(), origin, path);
      if (!(v > 0.0)) fail(origin, path + ": must be positive");
      if (item.key() == "rtol") {
        out.solve.rel_tol = v;
      } else if (item.key() == "atol") {
        out.solve.abs_tol = v;
      } else if (item.key() == "qtol") {
        out.quad_tol = v;
      } else {
        fail(origin, "tolerances: unknown key '" + item.key() + "'");
      }
    }
  }

  return out;
}

ProblemFile load_problem(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open problem file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_problem(buffer.str(), path);
}

}  // namespace gt
