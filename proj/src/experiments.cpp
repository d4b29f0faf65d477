#include "kryspace/experiments.hpp"

#include <array>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "kryspace/classk.hpp"
#include "kryspace/errors.hpp"
#include "kryspace/operator_zoo.hpp"
#include "kryspace/report.hpp"

namespace kryspace {

namespace {

struct NameEntry {
  ExperimentName name;
  std::string_view text;
  std::string_view description;
};

constexpr std::array<NameEntry, 6> kNames{{
    {ExperimentName::BaselineM, "baseline_M", "multiplication by 1/(5n); Krylov-solvable baseline"},
    {ExperimentName::NoninjectiveMtilde, "noninjective_Mtilde", "multiplication with kernel {3,6,9}"},
    {ExperimentName::ShiftR, "shift_R", "weighted right shift; not Krylov-solvable"},
    {ExperimentName::VolterraV, "volterra_V", "Volterra operator on L2[0,1], g = x^2/2"},
    {ExperimentName::Convolution, "convolution", "non-self-adjoint periodic convolution with kernel mode 0"},
    {ExperimentName::ClassKDemo, "classk_demo", "Taylor polynomial inverse of a diagonal on [1,2]"},
}};

constexpr Index kHarmonicCutoff = 250;
constexpr Index kConvolutionModes = 16;
constexpr Complex kClassKCenter{1.5, 0.0};

CoefficientVector convolution_krylov_part(SpacePtr space) {
  CoefficientVector f(space);
  for (Index slot = 1; slot <= space->dim(); ++slot) {
    const Index n = bilateral_index(slot);
    if (n != 0) f.values()(slot - 1) = 1.0 / (1.0 + static_cast<double>(n * n));
  }
  return f;
}

}  // namespace

std::string_view to_string(ExperimentName name) {
  for (const auto& e : kNames) {
    if (e.name == name) return e.text;
  }
  return "unknown";
}

std::string_view describe(ExperimentName name) {
  for (const auto& e : kNames) {
    if (e.name == name) return e.description;
  }
  return "";
}

std::optional<ExperimentName> parse_experiment_name(std::string_view text) {
  for (const auto& e : kNames) {
    if (e.text == text) return e.name;
  }
  return std::nullopt;
}

const std::vector<ExperimentName>& all_experiments() {
  static const std::vector<ExperimentName> names = [] {
    std::vector<ExperimentName> v;
    for (const auto& e : kNames) v.push_back(e.name);
    return v;
  }();
  return names;
}

ExperimentSpec ExperimentSpec::defaults(ExperimentName name) {
  switch (name) {
    case ExperimentName::BaselineM:
    case ExperimentName::NoninjectiveMtilde:
    case ExperimentName::ShiftR:
      return {name, 2500, 500};
    case ExperimentName::VolterraV:
      return {name, 2048, 175};
    case ExperimentName::Convolution:
      return {name, 2 * kConvolutionModes + 1, 2 * kConvolutionModes + 1};
    case ExperimentName::ClassKDemo:
      return {name, 101, 31};
  }
  throw std::invalid_argument("unknown experiment");
}

void ExperimentSpec::validate() const {
  if (n_max < 1) throw std::invalid_argument("n_max must be positive");
  if (n_max > ambient_dim) throw std::invalid_argument("n_max must not exceed the ambient dimension");
  switch (name) {
    case ExperimentName::BaselineM:
    case ExperimentName::NoninjectiveMtilde:
    case ExperimentName::ShiftR:
      if (ambient_dim < 10) throw std::invalid_argument("sequence experiments need an ambient dimension >= 10");
      break;
    case ExperimentName::VolterraV:
      if (ambient_dim < 16) throw std::invalid_argument("the Volterra grid needs at least 16 points");
      break;
    case ExperimentName::Convolution:
      if (ambient_dim < 3 || ambient_dim % 2 == 0) {
        throw std::invalid_argument("the convolution needs an odd ambient dimension >= 3");
      }
      break;
    case ExperimentName::ClassKDemo:
      if (ambient_dim < 2) throw std::invalid_argument("classk_demo needs an ambient dimension >= 2");
      break;
  }
}

CoefficientVector harmonic_solution(SpacePtr space, Index cutoff) {
  CoefficientVector f(space);
  for (Index n = 1; n <= std::min(cutoff, space->dim()); ++n) f.values()(n - 1) = 1.0 / static_cast<double>(n);
  return f;
}

double trigamma(int m) {
  if (m < 1) throw std::invalid_argument("trigamma: argument must be a positive integer");
  // Direct terms 1/(m+k)^2 for k < K, summed smallest first, then the
  // asymptotic expansion of Psi^(1)(m+K), whose truncation error is below
  // 1e-40 for m+K >= 1000.
  constexpr int kDirect = 1000;
  const double x = static_cast<double>(m) + kDirect;
  const double x2 = x * x;
  double tail = 1.0 / x + 1.0 / (2.0 * x2) +
                (1.0 / (6.0 * x) - 1.0 / (30.0 * x * x2) + 1.0 / (42.0 * x2 * x2 * x) - 1.0 / (30.0 * x2 * x2 * x2 * x)) /
                    x2;
  double sum = tail;
  for (int k = kDirect - 1; k >= 0; --k) {
    const double t = static_cast<double>(m) + k;
    sum += 1.0 / (t * t);
  }
  return sum;
}

double sum_inverse_squares(Index k) {
  double sum = 0.0;
  for (Index n = k; n >= 1; --n) sum += 1.0 / (static_cast<double>(n) * static_cast<double>(n));
  return sum;
}

LinearOperator make_classk_diagonal(Index dim) {
  if (dim < 2) throw std::invalid_argument("make_classk_diagonal: dimension must be at least 2");
  ComplexVector eig(dim);
  for (Index i = 0; i < dim; ++i) eig(i) = 1.0 + static_cast<double>(i) / static_cast<double>(dim - 1);
  return make_diagonal(std::move(eig), Space::sequence(dim));
}

ExperimentProblem build_experiment(const ExperimentSpec& spec) {
  spec.validate();
  const auto sigma = WeightSequence::reciprocal(5.0);
  const Index dim = spec.ambient_dim;
  const double harmonic_norm = std::sqrt(std::numbers::pi * std::numbers::pi / 6.0 - trigamma(kHarmonicCutoff + 1));

  switch (spec.name) {
    case ExperimentName::BaselineM: {
      auto op = make_multiplication(sigma, dim);
      auto f = harmonic_solution(op.space(), kHarmonicCutoff);
      auto g = op.apply(f);
      return {std::move(op), std::move(g), std::move(f), harmonic_norm};
    }
    case ExperimentName::NoninjectiveMtilde: {
      const std::array<Index, 3> kernel{3, 6, 9};
      auto op = make_masked_multiplication(sigma, kernel, dim);
      auto f = harmonic_solution(op.space(), kHarmonicCutoff);
      auto g = op.apply(f);
      return {std::move(op), std::move(g), std::move(f), harmonic_norm};
    }
    case ExperimentName::ShiftR: {
      auto op = make_weighted_right_shift(sigma, dim);
      auto f = harmonic_solution(op.space(), kHarmonicCutoff);
      auto g = op.apply(f);
      return {std::move(op), std::move(g), std::move(f), harmonic_norm};
    }
    case ExperimentName::VolterraV: {
      auto op = make_volterra(dim);
      const RealVector& x = op.space()->nodes();
      CoefficientVector f(op.space(), x.cast<Complex>());
      CoefficientVector g(op.space(), (0.5 * x.array().square()).matrix().cast<Complex>());
      return {std::move(op), std::move(g), std::move(f), 1.0 / std::sqrt(3.0)};
    }
    case ExperimentName::Convolution: {
      auto op = make_fourier_convolution((dim - 1) / 2);
      auto exact = convolution_krylov_part(op.space());
      exact.values()(bilateral_slot(0) - 1) = 1.0;
      auto g = op.apply(exact);
      double norm2 = 1.0;
      for (Index n = 1; n <= (dim - 1) / 2; ++n) norm2 += 2.0 / std::pow(1.0 + static_cast<double>(n * n), 2);
      return {std::move(op), std::move(g), std::move(exact), std::sqrt(norm2)};
    }
    case ExperimentName::ClassKDemo: {
      auto op = make_classk_diagonal(dim);
      CoefficientVector g(op.space(), ComplexVector::Constant(dim, 1.0 / std::sqrt(static_cast<double>(dim))));
      ComplexVector inv(dim);
      for (Index i = 0; i < dim; ++i) inv(i) = g.values()(i) / (1.0 + static_cast<double>(i) / (dim - 1.0));
      CoefficientVector exact(op.space(), std::move(inv));
      const double norm = exact.norm();
      return {std::move(op), std::move(g), std::move(exact), norm};
    }
  }
  throw std::invalid_argument("unknown experiment");
}

ExperimentResult run_experiment(const ExperimentSpec& spec) {
  ExperimentProblem problem = build_experiment(spec);
  const LinearOperator& op = problem.op;
  ExperimentResult result{spec, problem, {}, std::nullopt, {}, std::nullopt};
  std::ostringstream notes;
  notes << to_string(spec.name) << ": " << describe(spec.name) << "\n";

  if (spec.name == ExperimentName::ClassKDemo) {
    const auto curve = classk_error_curve(op, problem.g, problem.exact, kClassKCenter, spec.n_max - 1);
    for (const auto& row : curve) {
      result.rows.push_back({row.degree + 1, row.residual_norm, row.error_norm, row.solution_norm,
                             row.residual_norm});
    }
    notes << "center 1.5, spectrum in [1,2], geometric ratio 1/3\n";
    result.diagnostics.notes = notes.str();
    return result;
  }

  SolveTrace trace = gmres_solve(op, problem.g, spec.n_max, problem.exact);
  result.rows = trace.rows;
  const KrylovBasis& basis = trace.basis;
  notes << "iterations " << trace.rows.size();
  if (trace.reached_grade()) notes << " (grade " << *basis.grade() << ")";
  notes << "\n";

  DiagnosticsReport& diag = result.diagnostics;
  const bool necessary_only = spec.name == ExperimentName::ShiftR;
  if (op.info().normal || necessary_only) {
    diag.reducibility_defect = reducibility_defect(op, problem.g, basis, {necessary_only, {}});
    if (necessary_only) notes << "operator not normal: defect bounded below rules out Krylov reducibility\n";
  }
  if (!op.info().kernel_indices.empty()) {
    const auto profile = kernel_error_profile(problem.exact - trace.final_solution, op.info().kernel_indices);
    diag.kernel_error_profile = profile.on_kernel;
    diag.off_kernel_max = profile.off_kernel_max;
    notes << "error supported on kernel: " << (profile.supported_on_kernel ? "yes" : "no") << "\n";
  }
  if (basis.size() < op.dim() && op.dim() <= 600) {
    const auto ind = intersection_indicator(op, basis, op.dim());
    diag.intersection_max_cosine = ind.max_cosine;
    if (!ind.notes.empty()) notes << ind.notes << "\n";
  }
  result.krylov_projection = krylov_solution_projection(problem.exact, basis);
  diag.notes = notes.str();
  result.trace = std::move(trace);
  return result;
}

std::vector<std::filesystem::path> write_experiment_outputs(const ExperimentResult& result) {
  namespace fs = std::filesystem;
  const auto& spec = result.spec;
  fs::create_directories(spec.output_dir);
  const std::string name(to_string(spec.name));
  std::vector<fs::path> written;

  auto open = [&](const fs::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    return out;
  };

  const fs::path csv = spec.output_dir / (name + ".csv");
  {
    auto out = open(csv);
    write_trace_csv(out, result.rows);
    if (!out) throw std::runtime_error("write failed: " + csv.string());
  }
  written.push_back(csv);

  const fs::path diag = spec.output_dir / (name + "_diagnostics.csv");
  {
    auto out = open(diag);
    write_diagnostics_csv(out, result.diagnostics);
    if (!out) throw std::runtime_error("write failed: " + diag.string());
  }
  written.push_back(diag);

  if (spec.svg) {
    const fs::path svg = spec.output_dir / (name + ".svg");
    auto out = open(svg);
    out << render_trace_svg(result.rows, name);
    if (!out) throw std::runtime_error("write failed: " + svg.string());
    written.push_back(svg);
  }
  return written;
}

}  // namespace kryspace
