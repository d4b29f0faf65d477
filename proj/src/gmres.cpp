#include "kryspace/gmres.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "kryspace/errors.hpp"

namespace kryspace {

namespace {

/// Complex Givens rotation G = [c s; -conj(s) c] with G [a; b] = [r; 0].
struct Givens {
  double c = 1.0;
  Complex s = 0.0;

  static Givens zeroing(Complex a, Complex b) {
    const double abs_a = std::abs(a);
    const double abs_b = std::abs(b);
    Givens g;
    if (abs_b == 0.0) return g;
    if (abs_a == 0.0) {
      g.c = 0.0;
      g.s = std::conj(b) / abs_b;
      return g;
    }
    const double r = std::hypot(abs_a, abs_b);
    const Complex phase = a / abs_a;
    g.c = abs_a / r;
    g.s = phase * std::conj(b) / r;
    return g;
  }

  void apply(Complex& x, Complex& y) const {
    const Complex t = c * x + s * y;
    y = -std::conj(s) * x + c * y;
    x = t;
  }
};

}  // namespace

CoefficientVector residual_vector(const LinearOperator& op, const CoefficientVector& solution,
                                  const CoefficientVector& g) {
  require_compatible(*op.space(), *g.space(), "residual_vector");
  return g - op.apply(solution);
}

ResidualAndError residual_and_error(const LinearOperator& op, const CoefficientVector& solution,
                                    const CoefficientVector& g, const std::optional<CoefficientVector>& exact) {
  ResidualAndError out{residual_vector(op, solution, g).norm(), std::nullopt};
  if (exact) {
    require_compatible(*exact->space(), *solution.space(), "residual_and_error");
    out.error_norm = (*exact - solution).norm();
  }
  return out;
}

SolveTrace gmres_solve(const LinearOperator& op, const CoefficientVector& g, Index n_max,
                       const std::optional<CoefficientVector>& exact, GmresOptions options) {
  if (exact) require_compatible(*op.space(), *exact->space(), "gmres_solve");
  ArnoldiProcess arnoldi(op, g, n_max, options.arnoldi);

  const double g_norm = arnoldi.beta();
  ComplexMatrix r = ComplexMatrix::Zero(n_max + 1, n_max);  // rotated Hessenberg
  ComplexVector t = ComplexVector::Zero(n_max + 1);         // rotated beta e_1
  t(0) = g_norm;
  std::vector<Givens> rotations;
  rotations.reserve(static_cast<std::size_t>(n_max));

  std::vector<SolveRow> rows;
  rows.reserve(static_cast<std::size_t>(n_max));
  CoefficientVector solution(op.space());
  double pivot_scale = 0.0;

  while (arnoldi.step()) {
    const Index j = arnoldi.size() - 1;
    r.col(j).head(j + 2) = arnoldi.hessenberg_column(j);
    for (Index i = 0; i < j; ++i) rotations[static_cast<std::size_t>(i)].apply(r(i, j), r(i + 1, j));
    const Givens rot = Givens::zeroing(r(j, j), r(j + 1, j));
    rot.apply(r(j, j), r(j + 1, j));
    rot.apply(t(j), t(j + 1));
    rotations.push_back(rot);

    pivot_scale = std::max(pivot_scale, std::abs(r(j, j)));
    if (!(std::abs(r(j, j)) > options.rank_tol * pivot_scale) || pivot_scale == 0.0) {
      throw NumericalFailure("gmres: Hessenberg least-squares problem is rank deficient at iteration " +
                             std::to_string(j + 1));
    }

    const Index n = j + 1;
    ComplexVector y = r.topLeftCorner(n, n).triangularView<Eigen::Upper>().solve(t.head(n));
    solution.values().noalias() = arnoldi.vectors() * y;

    const auto measured = residual_and_error(op, solution, g, exact);
    rows.push_back(SolveRow{n, measured.residual_norm, measured.error_norm, solution.norm(), std::abs(t(n))});
  }

  SolveTrace trace{std::move(rows), std::move(solution), arnoldi.basis(), g_norm, std::nullopt};
  if (exact) trace.initial_error = exact->norm();
  return trace;
}

}  // namespace kryspace
