#pragma once

#include <optional>
#include <vector>

#include "kryspace/arnoldi.hpp"

namespace kryspace {

struct SolveRow {
  Index iteration;
  /// ||g - A f_N|| recomputed in the ambient space.
  double residual_norm;
  /// ||f - f_N||, present iff an exact solution was supplied.
  std::optional<double> error_norm;
  double solution_norm;
  /// Residual predicted by the Givens recurrence.
  double estimated_residual;
};

struct SolveTrace {
  std::vector<SolveRow> rows;
  CoefficientVector final_solution;
  KrylovBasis basis;
  /// Values for the zero iterate f_0 = 0.
  double initial_residual;
  std::optional<double> initial_error;

  bool reached_grade() const { return basis.grade().has_value(); }
};

struct GmresOptions {
  ArnoldiOptions arnoldi;
  /// Relative size of a triangular pivot below which the least-squares
  /// problem is declared rank deficient.
  double rank_tol = 1e-14;
};

/// Unrestarted, unpreconditioned GMRES from the zero initial guess. Runs to
/// n_max iterations or until the Krylov grade is reached.
SolveTrace gmres_solve(const LinearOperator& op, const CoefficientVector& g, Index n_max,
                       const std::optional<CoefficientVector>& exact = std::nullopt, GmresOptions options = {});

struct ResidualAndError {
  double residual_norm;
  std::optional<double> error_norm;
};

ResidualAndError residual_and_error(const LinearOperator& op, const CoefficientVector& solution,
                                    const CoefficientVector& g,
                                    const std::optional<CoefficientVector>& exact = std::nullopt);

/// g - A f.
CoefficientVector residual_vector(const LinearOperator& op, const CoefficientVector& solution,
                                  const CoefficientVector& g);

}  // namespace kryspace
