#include "kryspace/space.hpp"

#include <stdexcept>
#include <string>

namespace kryspace {

Space::Space(SpaceKind kind, Index dim) : kind_(kind), dim_(dim) {}

std::shared_ptr<const Space> Space::sequence(Index dim) {
  if (dim <= 0) throw std::invalid_argument("sequence space dimension must be positive");
  auto space = std::shared_ptr<Space>(new Space(SpaceKind::Sequence, dim));
  space->weights_ = RealVector::Ones(dim);
  space->sqrt_weights_ = RealVector::Ones(dim);
  return space;
}

std::shared_ptr<const Space> Space::uniform_grid(Index points) {
  if (points < 2) throw std::invalid_argument("a grid needs at least two points");
  auto space = std::shared_ptr<Space>(new Space(SpaceKind::Function, points));
  const double h = 1.0 / static_cast<double>(points - 1);
  space->nodes_ = RealVector::LinSpaced(points, 0.0, 1.0);
  space->weights_ = RealVector::Constant(points, h);
  space->weights_(0) = 0.5 * h;
  space->weights_(points - 1) = 0.5 * h;
  space->sqrt_weights_ = space->weights_.cwiseSqrt();
  return space;
}

Complex Space::inner(const Eigen::Ref<const ComplexVector>& a, const Eigen::Ref<const ComplexVector>& b) const {
  if (!weighted()) return a.dot(b);
  return (a.array().conjugate() * b.array() * weights_.array()).sum();
}

double Space::norm(const Eigen::Ref<const ComplexVector>& a) const {
  if (!weighted()) return a.norm();
  return std::sqrt((a.array().abs2() * weights_.array()).sum());
}

bool Space::compatible(const Space& other) const {
  if (this == &other) return true;
  if (kind_ != other.kind_ || dim_ != other.dim_) return false;
  return kind_ == SpaceKind::Sequence || nodes_ == other.nodes_;
}

void require_compatible(const Space& a, const Space& b, const char* where) {
  if (!a.compatible(b)) {
    throw std::invalid_argument(std::string(where) + ": dimension mismatch (" + std::to_string(a.dim()) + " vs " +
                                std::to_string(b.dim()) + ")");
  }
}

CoefficientVector::CoefficientVector(SpacePtr space) : CoefficientVector(space, ComplexVector::Zero(space->dim())) {}

CoefficientVector::CoefficientVector(SpacePtr space, ComplexVector values)
    : space_(std::move(space)), values_(std::move(values)) {
  if (!space_) throw std::invalid_argument("CoefficientVector needs a space");
  if (values_.size() != space_->dim()) {
    throw std::invalid_argument("CoefficientVector length " + std::to_string(values_.size()) +
                                " does not match space dimension " + std::to_string(space_->dim()));
  }
}

CoefficientVector CoefficientVector::basis(SpacePtr space, Index n) {
  if (n < 1 || n > space->dim()) throw std::invalid_argument("basis index out of range");
  CoefficientVector e(std::move(space));
  e.values_(n - 1) = 1.0;
  return e;
}

Complex CoefficientVector::inner(const CoefficientVector& other) const {
  require_compatible(*space_, *other.space_, "inner");
  return space_->inner(values_, other.values_);
}

CoefficientVector& CoefficientVector::operator+=(const CoefficientVector& other) {
  require_compatible(*space_, *other.space_, "operator+=");
  values_ += other.values_;
  return *this;
}

CoefficientVector& CoefficientVector::operator-=(const CoefficientVector& other) {
  require_compatible(*space_, *other.space_, "operator-=");
  values_ -= other.values_;
  return *this;
}

CoefficientVector& CoefficientVector::operator*=(Complex s) {
  values_ *= s;
  return *this;
}

CoefficientVector operator+(CoefficientVector a, const CoefficientVector& b) { return a += b; }
CoefficientVector operator-(CoefficientVector a, const CoefficientVector& b) { return a -= b; }
CoefficientVector operator*(Complex s, CoefficientVector a) { return a *= s; }

}  // namespace kryspace
