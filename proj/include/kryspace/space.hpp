#pragma once

#include <complex>
#include <memory>

#include <Eigen/Dense>

namespace kryspace {

using Complex = std::complex<double>;
using Index = Eigen::Index;
using ComplexVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

enum class SpaceKind { Sequence, Function };

/// Finite truncation of the ambient Hilbert space.
///
/// A sequence space is C^D with the Euclidean inner product (a truncation of
/// l^2 in its canonical basis). A function space holds samples of an L^2[0,1]
/// function on the uniform grid x_i = i/(D-1) and uses composite trapezoid
/// weights in its inner product.
class Space {
 public:
  static std::shared_ptr<const Space> sequence(Index dim);
  static std::shared_ptr<const Space> uniform_grid(Index points);

  SpaceKind kind() const { return kind_; }
  Index dim() const { return dim_; }
  bool weighted() const { return kind_ == SpaceKind::Function; }

  /// Quadrature weights; all ones for a sequence space.
  const RealVector& weights() const { return weights_; }
  /// Square roots of the weights, mapping storage to Euclidean coordinates.
  const RealVector& sqrt_weights() const { return sqrt_weights_; }
  /// Grid nodes (function spaces only; empty otherwise).
  const RealVector& nodes() const { return nodes_; }

  Complex inner(const Eigen::Ref<const ComplexVector>& a, const Eigen::Ref<const ComplexVector>& b) const;
  double norm(const Eigen::Ref<const ComplexVector>& a) const;

  /// Same kind, dimension and (for grids) nodes.
  bool compatible(const Space& other) const;

 private:
  Space(SpaceKind kind, Index dim);

  SpaceKind kind_;
  Index dim_;
  RealVector weights_;
  RealVector sqrt_weights_;
  RealVector nodes_;
};

using SpacePtr = std::shared_ptr<const Space>;

/// Truncated Hilbert-space element: coefficients together with their space.
class CoefficientVector {
 public:
  explicit CoefficientVector(SpacePtr space);
  CoefficientVector(SpacePtr space, ComplexVector values);

  /// Canonical basis vector e_n, n one-based.
  static CoefficientVector basis(SpacePtr space, Index n);

  const SpacePtr& space() const { return space_; }
  Index size() const { return values_.size(); }
  const ComplexVector& values() const { return values_; }
  ComplexVector& values() { return values_; }
  /// One-based access matching e_1, e_2, ...
  Complex at(Index n) const { return values_(n - 1); }

  double norm() const { return space_->norm(values_); }
  Complex inner(const CoefficientVector& other) const;

  CoefficientVector& operator+=(const CoefficientVector& other);
  CoefficientVector& operator-=(const CoefficientVector& other);
  CoefficientVector& operator*=(Complex s);

 private:
  SpacePtr space_;
  ComplexVector values_;
};

CoefficientVector operator+(CoefficientVector a, const CoefficientVector& b);
CoefficientVector operator-(CoefficientVector a, const CoefficientVector& b);
CoefficientVector operator*(Complex s, CoefficientVector a);

void require_compatible(const Space& a, const Space& b, const char* where);

}  // namespace kryspace
