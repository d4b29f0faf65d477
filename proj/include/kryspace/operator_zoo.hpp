#pragma once

#include <optional>
#include <span>
#include <vector>

#include "kryspace/linear_operator.hpp"

namespace kryspace {

/// Positive real weights sigma_1, sigma_2, ... used by multiplication and
/// weighted-shift operators. Indices are one-based.
class WeightSequence {
 public:
  /// Finite explicit list; only the first `values.size()` weights exist.
  static WeightSequence explicit_list(std::vector<double> values);
  /// sigma_n = 1 / (scale * n).
  static WeightSequence reciprocal(double scale);

  double at(Index n) const;
  /// Number of available weights, or nullopt for an unbounded generator.
  std::optional<Index> available() const;
  bool strictly_decreasing(Index count) const;
  /// sup of the first `count` weights.
  double sup(Index count) const;

 private:
  WeightSequence() = default;

  std::vector<double> values_;
  double scale_ = 0.0;
  bool reciprocal_ = false;
};

/// (Mv)_n = sigma_n v_n on C^D.
LinearOperator make_multiplication(const WeightSequence& weights, Index dim);

/// Multiplication whose weights are replaced by 0 on `zero_set` (one-based).
LinearOperator make_masked_multiplication(const WeightSequence& weights, std::span<const Index> zero_set, Index dim);

/// Diagonal operator with arbitrary complex entries on the given space.
LinearOperator make_diagonal(ComplexVector entries, SpacePtr space);

LinearOperator make_identity(Index dim);

/// Dense matrix acting on C^D; the adjoint is the conjugate transpose.
LinearOperator make_matrix(ComplexMatrix matrix, std::string name = "matrix");

/// [[1, cos t], [0, sin t]] on C^2.
LinearOperator make_a_theta(double theta);

/// R e_n = e_{n+1}. The coefficient shifted past slot D is dropped.
LinearOperator make_right_shift(Index dim);
/// L e_{n+1} = e_n, L e_1 = 0.
LinearOperator make_left_shift(Index dim);

/// R e_n = sigma_n e_{n+1}; weights must be strictly decreasing.
LinearOperator make_weighted_right_shift(const WeightSequence& weights, Index dim);

/// Storage slot of the l^2(Z) index n under the 0, 1, -1, 2, -2, ... interleaving.
Index bilateral_slot(Index n);
/// Inverse of bilateral_slot.
Index bilateral_index(Index slot);

/// R e_n = sigma_{|n|} e_{n+1} on the window -(D-1)/2 .. (D-1)/2, D odd.
/// sigma_{|n|} is the (|n|+1)-th entry of `weights`.
LinearOperator make_bilateral_weighted_shift(const WeightSequence& weights, Index dim);

/// (Vf)(x) = int_0^x f on the uniform grid of `points` nodes, by cumulative
/// trapezoid. The adjoint is the exact adjoint in the trapezoid inner product.
LinearOperator make_volterra(Index points);

/// Symbol of the periodic convolution: c_0 = 0,
/// c_n = 1 / (1 + 4 i pi n + (1 - 4 n^2) pi^2).
Complex fourier_symbol(Index n);

/// Diagonal action f_n -> c_n f_n on modes -n_modes .. n_modes (interleaved storage).
LinearOperator make_fourier_convolution(Index n_modes);

}  // namespace kryspace
