#pragma once

#include <optional>

#include "kryspace/linear_operator.hpp"

namespace kryspace {

struct ArnoldiOptions {
  /// Lucky breakdown is declared when the new direction has norm at most
  /// breakdown_tol times the largest Hessenberg column norm seen so far.
  double breakdown_tol = 1e-12;
  /// Extra Gram-Schmidt sweeps after the first one.
  int reorthogonalization_passes = 1;
};

/// Orthonormal basis q_1..q_N of K_N(A, g) with the extended Hessenberg
/// matrix H (N+1 x N) such that A Q_N = Q_{N+1} H.
///
/// When the grade was reached at step N the last row of H is zero and
/// A Q_N = Q_N H(0:N, :); no q_{N+1} exists.
class KrylovBasis {
 public:
  KrylovBasis(SpacePtr space, ComplexMatrix q, ComplexMatrix h, double beta, std::optional<Index> grade);

  const SpacePtr& space() const { return space_; }
  /// Number of Krylov vectors N.
  Index size() const { return h_.cols(); }
  /// Q_N, D x N.
  auto vectors() const { return q_.leftCols(size()); }
  /// Q_{N+1} when no breakdown occurred, else Q_N.
  const ComplexMatrix& extended_vectors() const { return q_; }
  const ComplexMatrix& hessenberg() const { return h_; }
  CoefficientVector vector(Index j) const;  // zero-based column
  double beta() const { return beta_; }
  std::optional<Index> grade() const { return grade_; }

  /// Q_k^* W v: coefficients of v along the first k basis vectors.
  ComplexVector coefficients(const ComplexVector& v, Index k) const;
  /// Leading k-vector sub-basis.
  KrylovBasis leading(Index k) const;

 private:
  SpacePtr space_;
  ComplexMatrix q_;
  ComplexMatrix h_;
  double beta_;
  std::optional<Index> grade_;
};

/// Step-wise Arnoldi recursion q_{j+1} ~ A q_j with modified Gram-Schmidt and
/// reorthogonalization.
class ArnoldiProcess {
 public:
  ArnoldiProcess(const LinearOperator& op, const CoefficientVector& g, Index capacity, ArnoldiOptions options = {});

  /// Adds one Krylov vector. Returns false once the grade has been reached
  /// (or the capacity is exhausted) and no step was taken.
  bool step();

  Index size() const { return steps_; }
  bool finished() const { return grade_.has_value() || steps_ == capacity_; }
  std::optional<Index> grade() const { return grade_; }
  double beta() const { return beta_; }

  /// Column j (0-based) of the current Hessenberg matrix, length j+2.
  auto hessenberg_column(Index j) const { return h_.col(j).head(j + 2); }
  auto vectors() const { return q_.leftCols(steps_); }

  KrylovBasis basis() const;

 private:
  LinearOperator op_;
  ArnoldiOptions options_;
  Index capacity_;
  Index steps_ = 0;
  double beta_;
  double column_scale_ = 0.0;
  std::optional<Index> grade_;
  ComplexMatrix q_;
  ComplexMatrix h_;
  ComplexVector work_;
};

KrylovBasis arnoldi(const LinearOperator& op, const CoefficientVector& g, Index n, ArnoldiOptions options = {});

/// ||v - P_K v|| for K = span of the basis vectors.
double distance_to_subspace(const CoefficientVector& v, const KrylovBasis& basis);

/// D - N orthonormal vectors (columns, storage coordinates) spanning the
/// complement of span(Q) in the D-dimensional truncation.
ComplexMatrix complement_basis(const KrylovBasis& basis, Index dim);

/// Largest |<q_i, q_j> - delta_ij| over the basis.
double orthonormality_defect(const KrylovBasis& basis);

/// max_j ||A q_j - sum_i H_ij q_i|| / ||A||, with ||A|| from metadata or the
/// Hessenberg scale.
double arnoldi_relation_residual(const LinearOperator& op, const KrylovBasis& basis);

}  // namespace kryspace
