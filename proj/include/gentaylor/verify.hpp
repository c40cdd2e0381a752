#pragma once

#include <string>
#include <vector>

#include "gentaylor/catalogue.hpp"
#include "gentaylor/problem_file.hpp"

namespace gt {

/// Outcome of one named invariant check.
struct CheckResult {
  std::string name;
  double residual = 0.0;   // worst observed value
  double threshold = 0.0;  // pass iff residual <= threshold
  bool passed = false;
};

/// Run the invariant suite for a catalogue entry: the integration-by-parts
/// identity, kernel and fundamental-set jets, kernel/adjoint duality,
/// recovery of the fundamental set from the adjoint solution, and the
/// reconstruction identity; closed-form agreement and memory-problem checks
/// are added when the entry carries them. Sampling uses a fixed seed, so
/// repeated runs produce identical reports.
std::vector<CheckResult> run_checks(const NamedProblem& entry,
                                    const SolveConfig& cfg = {},
                                    double quad_tol = 1e-10);

/// The same suite for a user-defined problem (no closed forms; the memory
/// check runs only when the file provides a memory kernel and initial data).
std::vector<CheckResult> run_checks(const ProblemFile& problem);

/// True when every check passed.
bool all_passed(const std::vector<CheckResult>& results);

}  // namespace gt
