#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kryspace/arnoldi.hpp"

namespace kryspace {

struct DefectPoint {
  Index n;
  double defect;
};

struct ReducibilityOptions {
  /// For a non-normal operator dist(A^* g, K_N) bounded away from zero still
  /// rules out Krylov reducibility, but its vanishing no longer implies it.
  /// Off by default: the call is refused for non-normal operators.
  bool allow_non_normal = false;
  ArnoldiOptions arnoldi;
};

/// dist(A^* g, K_N(A, g)) for N = 1 .. n (or up to the grade).
/// Throws UnsupportedOperator if A is not flagged normal and
/// options.allow_non_normal is false.
std::vector<DefectPoint> reducibility_defect(const LinearOperator& op, const CoefficientVector& g, Index n,
                                             ReducibilityOptions options = {});
/// Same ladder over a precomputed basis of K(A, g).
std::vector<DefectPoint> reducibility_defect(const LinearOperator& op, const CoefficientVector& g,
                                             const KrylovBasis& basis, ReducibilityOptions options = {});

struct IntersectionIndicator {
  /// Largest principal cosine between span(Q) and A (span Q)^perp.
  double max_cosine = 0.0;
  /// Numerical rank of the image of the complement.
  Index image_rank = 0;
  std::string notes;
};

/// Principal-cosine surrogate for the Krylov intersection restricted to the
/// D-dimensional truncation. Values near 1 point to a nontrivial
/// intersection. Dense in D: intended for small and moderate truncations.
IntersectionIndicator intersection_indicator(const LinearOperator& op, const KrylovBasis& basis, Index dim);
/// Variant with a caller-supplied orthonormal complement (columns, storage coordinates).
IntersectionIndicator intersection_indicator(const LinearOperator& op, const KrylovBasis& basis,
                                             const ComplexMatrix& complement);

struct KernelErrorProfile {
  std::vector<std::pair<Index, double>> on_kernel;
  double off_kernel_max = 0.0;
  /// off_kernel_max <= tol.
  bool supported_on_kernel = true;
};

/// Splits |e_n| into the kernel slots (one-based) and the maximum elsewhere.
KernelErrorProfile kernel_error_profile(const CoefficientVector& error, const std::vector<Index>& kernel_indices,
                                        double tol = 1e-6);

/// P_K f = Q Q^* f.
CoefficientVector krylov_solution_projection(const CoefficientVector& f, const KrylovBasis& basis);

struct DiagnosticsReport {
  std::vector<DefectPoint> reducibility_defect;
  std::optional<double> intersection_max_cosine;
  std::vector<std::pair<Index, double>> kernel_error_profile;
  std::optional<double> off_kernel_max;
  std::string notes;
};

struct DiagnoseOptions {
  bool allow_non_normal = false;
  /// Truncations above this size skip the dense intersection indicator.
  Index max_intersection_dim = 600;
  ArnoldiOptions arnoldi;
};

/// Runs every diagnostic applicable to (A, g) on K_n(A, g).
DiagnosticsReport diagnose(const LinearOperator& op, const CoefficientVector& g, Index n,
                           DiagnoseOptions options = {});

}  // namespace kryspace
