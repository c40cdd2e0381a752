#include <cstdio>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gentaylor/catalogue.hpp"
#include "gentaylor/errors.hpp"
#include "gentaylor/expansion.hpp"
#include "gentaylor/io.hpp"
#include "gentaylor/ode.hpp"
#include "gentaylor/problem_file.hpp"
#include "gentaylor/verify.hpp"
#include "gentaylor/volterra.hpp"

namespace {

struct CommonOptions {
  std::string problem_path;
  std::string name;
  std::string out = "-";
  double rtol = 0.0;  // 0 means "not set"
  double atol = 0.0;
  double qtol = 0.0;
  std::optional<double> x0_override;
};

// Everything a subcommand might need, assembled from either source.
struct LoadedProblem {
  gt::LinearOperator op;
  double x0 = 0.0;
  std::vector<double> init;
  std::vector<gt::SmoothFunction> test_functions;
  std::optional<gt::IntegroDifferentialProblem> memory;
  std::function<double(double)> forcing;
  gt::SolveConfig cfg;
  double quad_tol = 1e-10;
  std::optional<gt::NamedProblem> entry;
  std::optional<gt::ProblemFile> file;
};

void add_common(CLI::App* cmd, CommonOptions* opts, bool with_x0 = true) {
  cmd->add_option("--problem", opts->problem_path,
                  "path to a JSON problem definition");
  cmd->add_option("--name", opts->name, "catalogue entry name (see 'gt examples')");
  cmd->add_option("--out", opts->out, "output file; '-' for standard output");
  cmd->add_option("--rtol", opts->rtol, "relative tolerance for the integrator");
  cmd->add_option("--atol", opts->atol, "absolute tolerance for the integrator");
  cmd->add_option("--qtol", opts->qtol, "tolerance for the remainder quadrature");
  if (with_x0) {
    cmd->add_option_function<double>(
        "--x0",
        [opts](const double& v) { opts->x0_override = v; },
        "base point (defaults to the problem file's x0, else 0)");
  }
}

LoadedProblem load(const CommonOptions& opts) {
  if (opts.problem_path.empty() == opts.name.empty()) {
    throw gt::InputError("exactly one of --problem and --name is required");
  }

  std::optional<LoadedProblem> loaded;
  if (!opts.name.empty()) {
    gt::NamedProblem entry = gt::get(opts.name);
    LoadedProblem l{entry.op, 0.0,
                    std::vector<double>(static_cast<std::size_t>(entry.op.order()), 0.0),
                    entry.test_functions,
                    entry.ide ? std::optional<gt::IntegroDifferentialProblem>(
                                    entry.ide->problem)
                              : std::nullopt,
                    {},
                    {},
                    1e-10,
                    std::move(entry),
                    {}};
    loaded = std::move(l);
  } else {
    gt::ProblemFile file = gt::load_problem(opts.problem_path);
    LoadedProblem l{file.op, file.x0, file.init, {}, {}, {}, file.solve,
                    file.quad_tol, {}, {}};
    if (file.test_function) {
      l.test_functions.push_back(
          gt::make_smooth_function(*file.test_function, "test_function"));
    }
    if (file.forcing) {
      const gt::Expression e = *file.forcing;
      l.forcing = [e](double x) { return e.value(x); };
    }
    if (file.memory_kernel && !file.init.empty()) {
      const gt::Expression k = *file.memory_kernel;
      l.memory = gt::IntegroDifferentialProblem{
          file.op, l.forcing,
          [k](double x, double t) { return k.value(x, t); }, file.x0,
          file.init};
    }
    l.file = std::move(file);
    loaded = std::move(l);
  }

  if (opts.x0_override) {
    loaded->x0 = *opts.x0_override;
    if (!loaded->op.domain().contains(loaded->x0)) {
      throw gt::InputError("--x0 lies outside the problem interval");
    }
  }
  if (opts.rtol != 0.0) loaded->cfg.rel_tol = opts.rtol;
  if (opts.atol != 0.0) loaded->cfg.abs_tol = opts.atol;
  if (opts.qtol != 0.0) loaded->quad_tol = opts.qtol;
  return *loaded;
}

int cmd_kernel(const CommonOptions& opts, const std::string& x_spec,
               const std::string& s_spec) {
  const LoadedProblem p = load(opts);
  const std::vector<double> xs = gt::parse_grid(x_spec);
  const std::vector<double> ss = s_spec.empty()
                                     ? std::vector<double>{p.x0}
                                     : gt::parse_grid(s_spec);
  const std::vector<std::vector<double>> table =
      gt::kernel_table(p.op, xs, ss, p.cfg);
  std::vector<std::vector<double>> rows;
  rows.reserve(xs.size() * ss.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = 0; j < ss.size(); ++j) {
      rows.push_back({xs[i], ss[j], table[i][j]});
    }
  }
  gt::write_csv(opts.out, {"x", "s", "K"}, rows);
  return 0;
}

int cmd_fundamental(const CommonOptions& opts, const std::string& x_spec) {
  const LoadedProblem p = load(opts);
  const std::vector<double> xs = gt::parse_grid(x_spec);
  double lo = p.x0;
  double hi = p.x0;
  for (double x : xs) {
    lo = std::min(lo, x);
    hi = std::max(hi, x);
  }
  const gt::FundamentalSet fs =
      gt::fundamental_set(p.op, p.x0, gt::Interval(lo, hi), p.cfg);
  std::vector<std::string> header = {"x"};
  for (int i = 1; i <= p.op.order(); ++i) header.push_back("y" + std::to_string(i));
  std::vector<std::vector<double>> rows;
  for (double x : xs) {
    std::vector<double> row = {x};
    for (int i = 1; i <= p.op.order(); ++i) row.push_back(fs.value(i, x));
    rows.push_back(std::move(row));
  }
  gt::write_csv(opts.out, header, rows);
  return 0;
}

int cmd_expand(const CommonOptions& opts, const std::string& x_spec,
               int function_index) {
  const LoadedProblem p = load(opts);
  if (p.test_functions.empty()) {
    throw gt::InputError("expand needs a test_function in the problem file");
  }
  if (function_index < 0 ||
      function_index >= static_cast<int>(p.test_functions.size())) {
    throw gt::InputError("--function index out of range; this problem has " +
                         std::to_string(p.test_functions.size()) +
                         " test functions");
  }
  const gt::SmoothFunction& f =
      p.test_functions[static_cast<std::size_t>(function_index)];
  std::vector<std::vector<double>> rows;
  for (double x : gt::parse_grid(x_spec)) {
    const gt::ReconstructionReport r = gt::reconstruct(
        p.op, f, p.x0, x, gt::KernelPath::automatic, p.cfg, p.quad_tol);
    rows.push_back({x, r.initial_data_part, r.remainder_part, r.total,
                    r.reference_value, r.discrepancy});
  }
  gt::write_csv(opts.out,
                {"x", "initial_part", "remainder", "total", "reference",
                 "discrepancy"},
                rows);
  return 0;
}

int cmd_solve(const CommonOptions& opts, const std::string& x_spec) {
  const LoadedProblem p = load(opts);
  std::vector<double> init = p.init;
  if (static_cast<int>(init.size()) != p.op.order()) {
    throw gt::InputError("solve needs init with " +
                         std::to_string(p.op.order()) + " entries");
  }
  std::function<double(double)> forcing = p.forcing;
  if (!forcing) forcing = [](double) { return 0.0; };
  const std::vector<double> xs = gt::parse_grid(x_spec);
  const std::vector<gt::CauchyPoint> points =
      gt::cauchy_solve_grid(p.op, p.x0, init, forcing, xs,
                            gt::KernelPath::automatic, p.cfg, p.quad_tol);
  std::vector<std::vector<double>> rows;
  for (const gt::CauchyPoint& pt : points) rows.push_back({pt.x, pt.value});
  gt::write_csv(opts.out, {"x", "Y"}, rows);
  return 0;
}

int cmd_volterra(const CommonOptions& opts, double end, int steps) {
  const LoadedProblem p = load(opts);
  if (!p.memory) {
    throw gt::InputError(
        "volterra needs a memory problem: a problem file with memory_kernel "
        "and init, or a catalogue entry that carries one");
  }
  const gt::IntegroDifferentialProblem& problem = *p.memory;
  const gt::VolterraProblem reduced = gt::reduce(
      problem, gt::Interval::hull(problem.x0, end), p.cfg, p.quad_tol);
  const gt::GridSolution via = gt::solve_volterra(reduced, end, steps, false);
  const gt::GridSolution direct =
      gt::solve_ide_direct(problem, end, steps, false);
  std::vector<std::vector<double>> rows;
  for (std::size_t i = 0; i < via.nodes.size(); ++i) {
    rows.push_back({via.nodes[i], via.values[i], direct.values[i],
                    std::abs(via.values[i] - direct.values[i])});
  }
  gt::write_csv(opts.out, {"x", "y_volterra", "y_direct", "diff"}, rows);
  return 0;
}

int cmd_verify(const CommonOptions& opts) {
  const LoadedProblem p = load(opts);
  std::vector<gt::CheckResult> results;
  if (p.entry) {
    results = gt::run_checks(*p.entry, p.cfg, p.quad_tol);
  } else {
    results = gt::run_checks(*p.file);
  }
  for (const gt::CheckResult& r : results) {
    std::printf("%s %-24s residual %10.3e  threshold %10.3e\n",
                r.passed ? "PASS" : "FAIL", r.name.c_str(), r.residual,
                r.threshold);
  }
  const bool ok = gt::all_passed(results);
  std::printf("%s\n", ok ? "all checks passed" : "some checks FAILED");
  return ok ? 0 : 1;
}

int cmd_examples() {
  for (const std::string& name : gt::names()) {
    const gt::NamedProblem entry = gt::get(name);
    std::printf("%-18s %s\n", name.c_str(), entry.description.c_str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generalized Taylor expansions for linear differential operators"};
  app.require_subcommand(1);

  CommonOptions kernel_opts, fundamental_opts, expand_opts, solve_opts,
      volterra_opts, verify_opts;
  std::string kernel_grid, kernel_s_grid, fundamental_grid, expand_grid,
      solve_grid;
  int expand_function = 0;
  double volterra_end = 1.0;
  int volterra_steps = 200;

  CLI::App* kernel = app.add_subcommand("kernel", "tabulate the kernel K(x, s)");
  add_common(kernel, &kernel_opts);
  kernel->add_option("--grid", kernel_grid, "x grid as start:stop:count")->required();
  kernel->add_option("--s-grid", kernel_s_grid,
                     "source grid as start:stop:count (default: the base point)");

  CLI::App* fundamental =
      app.add_subcommand("fundamental", "tabulate the fundamental solutions");
  add_common(fundamental, &fundamental_opts);
  fundamental->add_option("--grid", fundamental_grid, "x grid as start:stop:count")
      ->required();

  CLI::App* expand = app.add_subcommand(
      "expand", "reconstruct a test function from initial data plus remainder");
  add_common(expand, &expand_opts);
  expand->add_option("--grid", expand_grid, "x grid as start:stop:count")->required();
  expand->add_option("--function", expand_function,
                     "index of the catalogue test function (default 0)");

  CLI::App* solve = app.add_subcommand(
      "solve", "solve the nonhomogeneous problem from initial data and forcing");
  add_common(solve, &solve_opts);
  solve->add_option("--grid", solve_grid, "x grid as start:stop:count")->required();

  CLI::App* volterra = app.add_subcommand(
      "volterra", "solve the memory problem two ways and compare");
  add_common(volterra, &volterra_opts);
  volterra->add_option("--end", volterra_end, "march end point")->required();
  volterra->add_option("--steps", volterra_steps, "number of marching steps");

  CLI::App* verify =
      app.add_subcommand("verify", "run the invariant checks and report PASS/FAIL");
  add_common(verify, &verify_opts, /*with_x0=*/false);

  CLI::App* examples =
      app.add_subcommand("examples", "list the built-in catalogue entries");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (kernel->parsed()) return cmd_kernel(kernel_opts, kernel_grid, kernel_s_grid);
    if (fundamental->parsed()) return cmd_fundamental(fundamental_opts, fundamental_grid);
    if (expand->parsed()) return cmd_expand(expand_opts, expand_grid, expand_function);
    if (solve->parsed()) return cmd_solve(solve_opts, solve_grid);
    if (volterra->parsed()) return cmd_volterra(volterra_opts, volterra_end, volterra_steps);
    if (verify->parsed()) return cmd_verify(verify_opts);
    if (examples->parsed()) return cmd_examples();
  } catch (const gt::InputError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const gt::ArgumentError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const gt::Error& e) {
    std::fprintf(stderr, "numerical failure: %s\n", e.what());
    return 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "unexpected failure: %s\n", e.what());
    return 3;
  }
  return 0;
}
