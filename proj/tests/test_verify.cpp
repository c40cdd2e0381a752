#include <string>
#include <vector>

#include "doctest.h"
#include "gentaylor/catalogue.hpp"
#include "gentaylor/problem_file.hpp"
#include "gentaylor/verify.hpp"

namespace {

bool has_check(const std::vector<gt::CheckResult>& results, const std::string& name) {
  for (const gt::CheckResult& r : results) {
    if (r.name == name) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("the harmonic catalogue entry passes every invariant check") {
  const std::vector<gt::CheckResult> results = gt::run_checks(gt::get("harmonic"));
  CHECK(gt::all_passed(results));
  for (const gt::CheckResult& r : results) {
    CHECK(r.passed);
    CHECK(r.residual < r.threshold);
  }
  CHECK(has_check(results, "lagrange_identity"));
  CHECK(has_check(results, "kernel_source_jet"));
  CHECK(has_check(results, "fundamental_base_jet"));
  CHECK(has_check(results, "kernel_duality"));
  CHECK(has_check(results, "fundamental_recovery"));
  CHECK(has_check(results, "reconstruction_identity"));
  CHECK(has_check(results, "closed_form_agreement"));
  CHECK_FALSE(has_check(results, "memory_cross_validation"));
}

TEST_CASE("entries with a memory problem get the extra marching checks") {
  const std::vector<gt::CheckResult> results = gt::run_checks(gt::get("harmonic_ide"));
  CHECK(gt::all_passed(results));
  CHECK(has_check(results, "memory_cross_validation"));
  CHECK(has_check(results, "memory_solution_match"));
}

TEST_CASE("a user problem file runs the generic suite") {
  const gt::ProblemFile p = gt::parse_problem(
      R"json({"order": 2, "interval": [-7, 7], "coefficients": ["0", "1"],
          "test_function": "exp(x)", "x0": 0, "init": [0, 0]})json",
      "test.json");
  const std::vector<gt::CheckResult> results = gt::run_checks(p);
  CHECK(gt::all_passed(results));
  CHECK(has_check(results, "lagrange_identity"));
  CHECK(has_check(results, "reconstruction_identity"));
  CHECK_FALSE(has_check(results, "closed_form_agreement"));
  CHECK_FALSE(has_check(results, "memory_cross_validation"));
}

TEST_CASE("a memory kernel in the file adds the cross-validation check") {
  const gt::ProblemFile p = gt::parse_problem(
      R"json({"order": 1, "interval": [-8, 8], "coefficients": ["0"],
          "memory_kernel": "1", "x0": 0, "init": [1]})json",
      "test.json");
  const std::vector<gt::CheckResult> results = gt::run_checks(p);
  CHECK(gt::all_passed(results));
  CHECK(has_check(results, "memory_cross_validation"));
  CHECK_FALSE(has_check(results, "memory_solution_match"));
}

TEST_CASE("a single failing check fails the whole report") {
  std::vector<gt::CheckResult> results = {{"ok", 1e-12, 1e-6, true},
                                          {"bad", 2.0, 1e-6, false}};
  CHECK_FALSE(gt::all_passed(results));
}
