#include "kryspace/linear_operator.hpp"

#include <stdexcept>

namespace kryspace {

LinearOperator::LinearOperator(SpacePtr space, Action forward, Action adjoint, OperatorInfo info)
    : space_(std::move(space)), forward_(std::move(forward)), adjoint_(std::move(adjoint)), info_(std::move(info)) {
  if (!space_ || !forward_ || !adjoint_) throw std::invalid_argument("LinearOperator needs a space and both actions");
}

CoefficientVector LinearOperator::apply(const CoefficientVector& v) const {
  require_compatible(*space_, *v.space(), "LinearOperator::apply");
  CoefficientVector out(space_);
  forward_(v.values(), out.values());
  return out;
}

CoefficientVector LinearOperator::adjoint_apply(const CoefficientVector& v) const {
  require_compatible(*space_, *v.space(), "LinearOperator::adjoint_apply");
  CoefficientVector out(space_);
  adjoint_(v.values(), out.values());
  return out;
}

void LinearOperator::apply(const ComplexVector& in, ComplexVector& out) const {
  if (in.size() != dim()) throw std::invalid_argument("LinearOperator::apply: dimension mismatch");
  out.resize(dim());
  forward_(in, out);
}

void LinearOperator::adjoint_apply(const ComplexVector& in, ComplexVector& out) const {
  if (in.size() != dim()) throw std::invalid_argument("LinearOperator::adjoint_apply: dimension mismatch");
  out.resize(dim());
  adjoint_(in, out);
}

}  // namespace kryspace
