#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "kryspace/space.hpp"

namespace kryspace {

/// Analytic facts about an operator that are known at construction time.
struct OperatorInfo {
  std::string name;
  /// Exact operator norm of the untruncated operator, when known.
  std::optional<double> operator_norm;
  /// One-based storage slots spanning the kernel of the truncated operator.
  std::vector<Index> kernel_indices;
  bool self_adjoint = false;
  bool normal = false;
};

/// Matrix-free bounded operator on a truncated space.
///
/// Both actions write `out = op(in)`; `out` is already sized to the space
/// dimension and may hold garbage on entry. The adjoint is taken with respect
/// to the space's inner product. Instances are immutable and cheap to copy.
class LinearOperator {
 public:
  using Action = std::function<void(const ComplexVector& in, ComplexVector& out)>;

  LinearOperator(SpacePtr space, Action forward, Action adjoint, OperatorInfo info);

  const SpacePtr& space() const { return space_; }
  Index dim() const { return space_->dim(); }
  const OperatorInfo& info() const { return info_; }

  CoefficientVector apply(const CoefficientVector& v) const;
  CoefficientVector adjoint_apply(const CoefficientVector& v) const;

  void apply(const ComplexVector& in, ComplexVector& out) const;
  void adjoint_apply(const ComplexVector& in, ComplexVector& out) const;

 private:
  SpacePtr space_;
  Action forward_;
  Action adjoint_;
  OperatorInfo info_;
};

}  // namespace kryspace
