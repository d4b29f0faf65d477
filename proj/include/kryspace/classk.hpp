#pragma once

#include <vector>

#include "kryspace/linear_operator.hpp"

namespace kryspace {

/// Truncated Taylor series of 1/z about a nonzero center c:
/// p_n(z) = sum_{k=0}^{n} (-1)^k (z - c)^k / c^{k+1}.
///
/// Converges uniformly on any disk |z - c| <= r with r < |c|, so p_n(A) -> A^{-1}
/// for operators whose spectrum sits in such a disk.
struct PolySeries {
  Complex center;
  Index degree;
  /// Coefficient k multiplies (z - c)^k.
  std::vector<Complex> coefficients;

  Complex evaluate(Complex z) const;
  /// 1/z - p_n(z) in closed form.
  Complex remainder(Complex z) const;
  /// sup of |1/z - p_n(z)| over |z - c| <= radius: (r/|c|)^{n+1} / (|c| - r).
  double remainder_bound(double radius) const;
};

PolySeries inverse_poly(Complex center, Index degree);

/// p(A) g by Horner recursion in (A - c); the result lies in K_{n+1}(A, g).
CoefficientVector apply_poly(const LinearOperator& op, const PolySeries& p, const CoefficientVector& g);

struct ClassKRow {
  Index degree;
  /// ||p_n(A) g - reference||.
  double error_norm;
  /// ||g - A p_n(A) g||.
  double residual_norm;
  double solution_norm;
};

/// Error of p_n(A) g against a reference solution for n = 0 .. degree_max.
std::vector<ClassKRow> classk_error_curve(const LinearOperator& op, const CoefficientVector& g,
                                          const CoefficientVector& reference, Complex center, Index degree_max);

/// Least-squares slope of log(error) against degree over rows [first, last].
double fitted_log_slope(const std::vector<ClassKRow>& rows, Index first, Index last);

}  // namespace kryspace
