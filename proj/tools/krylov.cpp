// krylov: command-line driver for the reference experiments and diagnostics.
//
// Exit codes: 0 success, 1 invalid arguments, 2 numerical or I/O failure.

#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "kryspace/classk.hpp"
#include "kryspace/diagnostics.hpp"
#include "kryspace/errors.hpp"
#include "kryspace/experiments.hpp"
#include "kryspace/report.hpp"
#include "kryspace/specs.hpp"

namespace {

using namespace kryspace;

constexpr int kExitInvalid = 1;
constexpr int kExitFailure = 2;

struct RunArgs {
  std::string name;
  std::optional<Index> n_max;
  std::optional<Index> ambient_dim;
  std::optional<Index> grid;
  std::string out = ".";
  bool svg = false;
};

struct DiagnoseArgs {
  OperatorSpec op;
  std::string kernel;
  std::string datum;
  std::optional<Index> n;
  bool allow_non_normal = false;
  Index max_intersection_dim = 600;
};

struct ClassKArgs {
  double center = 1.5;
  Index degree_max = 30;
  Index dim = 101;
  std::string out;
};

int cmd_list() {
  for (auto name : all_experiments()) {
    const auto spec = ExperimentSpec::defaults(name);
    std::cout << to_string(name) << "\t" << describe(name) << " (D=" << spec.ambient_dim << ", n_max=" << spec.n_max
              << ")\n";
  }
  return 0;
}

int cmd_run(const RunArgs& args) {
  const auto name = parse_experiment_name(args.name);
  if (!name) {
    std::cerr << "krylov run: unknown experiment '" << args.name << "' (see `krylov list`)\n";
    return kExitInvalid;
  }
  auto spec = ExperimentSpec::defaults(*name);
  if (args.ambient_dim) spec.ambient_dim = *args.ambient_dim;
  if (args.grid) {
    if (*name != ExperimentName::VolterraV) {
      std::cerr << "krylov run: --grid only applies to volterra_V\n";
      return kExitInvalid;
    }
    spec.ambient_dim = *args.grid;
  }
  if (args.n_max) spec.n_max = *args.n_max;
  spec.output_dir = args.out;
  spec.svg = args.svg;
  spec.validate();

  const auto result = run_experiment(spec);
  for (const auto& path : write_experiment_outputs(result)) std::cerr << "wrote " << path.string() << "\n";
  const auto& last = result.rows.back();
  std::cerr << result.diagnostics.notes;
  std::cout << "N=" << last.iteration << " residual_norm=" << format_real(last.residual_norm)
            << " error_norm=" << (last.error_norm ? format_real(*last.error_norm) : std::string("-"))
            << " solution_norm=" << format_real(last.solution_norm) << "\n";
  return 0;
}

int cmd_diagnose(DiagnoseArgs args) {
  args.op.kernel = parse_index_list(args.kernel);
  const auto op = make_operator(args.op);
  const auto g = make_datum(args.datum, op);
  const Index n = args.n.value_or(std::min<Index>(op.dim(), 500));
  DiagnoseOptions options;
  options.allow_non_normal = args.allow_non_normal;
  options.max_intersection_dim = args.max_intersection_dim;
  const auto report = diagnose(op, g, n, options);
  write_diagnostics_csv(std::cout, report);
  std::cerr << report.notes;
  return 0;
}

int cmd_classk(const ClassKArgs& args) {
  const auto op = make_classk_diagonal(args.dim);
  // Spectrum [1, 2]: smallest disk about the center that holds it.
  const double radius = std::max(std::abs(1.0 - args.center), std::abs(2.0 - args.center));
  if (!(radius < std::abs(args.center))) {
    std::cerr << "krylov classk: the disk about " << args.center << " holding [1,2] contains 0\n";
    return kExitInvalid;
  }
  CoefficientVector g(op.space(), ComplexVector::Constant(args.dim, 1.0 / std::sqrt(static_cast<double>(args.dim))));
  CoefficientVector exact(op.space());
  for (Index i = 0; i < args.dim; ++i) {
    exact.values()(i) = g.values()(i) / (1.0 + static_cast<double>(i) / static_cast<double>(args.dim - 1));
  }
  const auto rows = classk_error_curve(op, g, exact, args.center, args.degree_max);
  if (args.out.empty()) {
    write_classk_csv(std::cout, rows, args.center, radius, g.norm());
  } else {
    std::ofstream out(args.out, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + args.out);
    write_classk_csv(out, rows, args.center, radius, g.norm());
    if (!out) throw std::runtime_error("write failed: " + args.out);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Krylov solutions of truncated infinite-dimensional inverse problems"};
  app.require_subcommand(1);

  app.add_subcommand("list", "List the reference experiments");

  RunArgs run;
  auto* run_cmd = app.add_subcommand("run", "Run a reference experiment and write CSV/SVG");
  run_cmd->add_option("name", run.name, "Experiment name")->required();
  run_cmd->add_option("--n-max", run.n_max, "Maximum number of GMRES iterations")->check(CLI::PositiveNumber);
  run_cmd->add_option("--ambient-dim", run.ambient_dim, "Ambient truncation dimension")->check(CLI::PositiveNumber);
  run_cmd->add_option("--grid", run.grid, "Grid points (volterra_V)")->check(CLI::PositiveNumber);
  run_cmd->add_option("--out", run.out, "Output directory");
  run_cmd->add_flag("--svg", run.svg, "Also write an SVG plot");

  DiagnoseArgs diag;
  auto* diag_cmd = app.add_subcommand("diagnose", "Structural diagnostics for an operator and datum");
  diag_cmd->add_option("operator", diag.op.kind, "Operator kind")->required()->check(CLI::IsMember(operator_kinds()));
  diag_cmd->add_option("--datum", diag.datum, "Datum spec (basis:K, ones, monomial:P, harmonic[:K], linear)")
      ->required();
  diag_cmd->add_option("--weights", diag.op.weights, "Weights (reciprocal:S or explicit:a,b,...)");
  diag_cmd->add_option("--kernel", diag.kernel, "Zeroed slots for mult-masked, e.g. 3,6,9");
  diag_cmd->add_option("--dim", diag.op.dim, "Sequence truncation dimension")->check(CLI::PositiveNumber);
  diag_cmd->add_option("--grid", diag.op.grid, "Grid points for volterra")->check(CLI::PositiveNumber);
  diag_cmd->add_option("--theta", diag.op.theta, "Angle for atheta");
  diag_cmd->add_option("-n,--krylov-dim", diag.n, "Krylov dimension")->check(CLI::PositiveNumber);
  diag_cmd->add_flag("--allow-non-normal", diag.allow_non_normal, "Report the A*g ladder for non-normal operators");
  diag_cmd->add_option("--max-intersection-dim", diag.max_intersection_dim,
                       "Skip the dense intersection indicator above this dimension");

  ClassKArgs ck;
  auto* ck_cmd = app.add_subcommand("classk", "Error of the Taylor polynomial inverse versus degree");
  ck_cmd->add_option("--center", ck.center, "Expansion center");
  ck_cmd->add_option("--degree-max", ck.degree_max, "Largest degree")->check(CLI::NonNegativeNumber);
  ck_cmd->add_option("--dim", ck.dim, "Number of eigenvalues on [1,2]")->check(CLI::Range(2, 1000000));
  ck_cmd->add_option("--out", ck.out, "Output CSV (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    if (app.got_subcommand("list")) return cmd_list();
    if (run_cmd->parsed()) return cmd_run(run);
    if (diag_cmd->parsed()) return cmd_diagnose(diag);
    if (ck_cmd->parsed()) return cmd_classk(ck);
  } catch (const std::invalid_argument& e) {
    std::cerr << "krylov: invalid argument: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const kryspace::UnsupportedOperator& e) {
    std::cerr << "krylov: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "krylov: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitInvalid;
}
