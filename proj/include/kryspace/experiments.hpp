#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kryspace/diagnostics.hpp"
#include "kryspace/gmres.hpp"

namespace kryspace {

enum class ExperimentName { BaselineM, NoninjectiveMtilde, ShiftR, VolterraV, Convolution, ClassKDemo };

std::string_view to_string(ExperimentName name);
std::optional<ExperimentName> parse_experiment_name(std::string_view text);
const std::vector<ExperimentName>& all_experiments();
std::string_view describe(ExperimentName name);

struct ExperimentSpec {
  ExperimentName name;
  /// Sequence length D, grid size M for Volterra, 2 * modes + 1 for the convolution.
  Index ambient_dim;
  Index n_max;
  std::filesystem::path output_dir = ".";
  bool svg = false;

  static ExperimentSpec defaults(ExperimentName name);
  /// Throws std::invalid_argument on inconsistent sizes.
  void validate() const;
};

struct ExperimentProblem {
  LinearOperator op;
  CoefficientVector g;
  CoefficientVector exact;
  /// ||exact|| from its closed form.
  double exact_norm_closed_form;
};

struct ExperimentResult {
  ExperimentSpec spec;
  ExperimentProblem problem;
  /// One row per completed iteration (per polynomial degree for classk_demo).
  std::vector<SolveRow> rows;
  /// GMRES output; absent for classk_demo.
  std::optional<SolveTrace> trace;
  DiagnosticsReport diagnostics;
  /// P_K exact over the final Krylov basis, when a trace exists.
  std::optional<CoefficientVector> krylov_projection;
};

ExperimentProblem build_experiment(const ExperimentSpec& spec);

/// Runs solver and diagnostics without touching the filesystem.
ExperimentResult run_experiment(const ExperimentSpec& spec);

/// Writes <output_dir>/<name>.csv, <name>_diagnostics.csv and, if requested,
/// <name>.svg. Returns the written paths.
std::vector<std::filesystem::path> write_experiment_outputs(const ExperimentResult& result);

/// f_n = 1/n for n <= cutoff, 0 beyond, on C^D.
CoefficientVector harmonic_solution(SpacePtr space, Index cutoff = 250);

/// Psi^(1)(m) = sum_{k>=0} 1/(m+k)^2 by direct summation plus an
/// Euler-Maclaurin tail.
double trigamma(int m);

/// sum_{n=1}^{k} 1/n^2, summed from the small end.
double sum_inverse_squares(Index k);

/// Diagonal class-K test operator: eigenvalues evenly spaced on [1, 2].
LinearOperator make_classk_diagonal(Index dim);

}  // namespace kryspace
