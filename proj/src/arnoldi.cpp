#include "kryspace/arnoldi.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "kryspace/errors.hpp"

namespace kryspace {

namespace {

/// Weighted Q^* W v for a block of columns.
ComplexVector project(const Space& space, const Eigen::Ref<const ComplexMatrix>& q, const ComplexVector& v) {
  if (!space.weighted()) return q.adjoint() * v;
  ComplexVector wv = v.cwiseProduct(space.weights().cast<Complex>());
  return q.adjoint() * wv;
}

}  // namespace

KrylovBasis::KrylovBasis(SpacePtr space, ComplexMatrix q, ComplexMatrix h, double beta, std::optional<Index> grade)
    : space_(std::move(space)), q_(std::move(q)), h_(std::move(h)), beta_(beta), grade_(grade) {}

CoefficientVector KrylovBasis::vector(Index j) const {
  if (j < 0 || j >= q_.cols()) throw std::invalid_argument("KrylovBasis::vector: index out of range");
  return CoefficientVector(space_, q_.col(j));
}

ComplexVector KrylovBasis::coefficients(const ComplexVector& v, Index k) const {
  return project(*space_, q_.leftCols(k), v);
}

KrylovBasis KrylovBasis::leading(Index k) const {
  if (k < 1 || k > size()) throw std::invalid_argument("KrylovBasis::leading: size out of range");
  if (k == size()) return *this;
  return KrylovBasis(space_, q_.leftCols(k + 1), h_.topLeftCorner(k + 1, k), beta_, std::nullopt);
}

ArnoldiProcess::ArnoldiProcess(const LinearOperator& op, const CoefficientVector& g, Index capacity,
                               ArnoldiOptions options)
    : op_(op), options_(options), capacity_(capacity) {
  require_compatible(*op.space(), *g.space(), "arnoldi");
  if (capacity < 1) throw std::invalid_argument("arnoldi: number of steps must be positive");
  if (capacity > op.dim()) throw std::invalid_argument("arnoldi: more steps than the ambient dimension");
  beta_ = g.norm();
  if (!(beta_ > 0.0)) throw std::invalid_argument("arnoldi: starting vector must be nonzero");
  if (!std::isfinite(beta_)) throw NumericalFailure("arnoldi: starting vector is not finite");
  q_ = ComplexMatrix::Zero(op.dim(), capacity + 1);
  h_ = ComplexMatrix::Zero(capacity + 1, capacity);
  q_.col(0) = g.values() / beta_;
  work_.resize(op.dim());
}

bool ArnoldiProcess::step() {
  if (finished()) return false;
  const Index j = steps_;
  const Space& space = *op_.space();
  op_.apply(ComplexVector(q_.col(j)), work_);

  for (int pass = 0; pass <= options_.reorthogonalization_passes; ++pass) {
    for (Index i = 0; i <= j; ++i) {
      const Complex c = space.inner(q_.col(i), work_);
      h_(i, j) += c;
      work_ -= c * q_.col(i);
    }
  }
  const double h_next = space.norm(work_);
  if (!std::isfinite(h_next)) throw NumericalFailure("arnoldi: non-finite Krylov vector");
  h_(j + 1, j) = h_next;
  column_scale_ = std::max(column_scale_, h_.col(j).head(j + 2).norm());
  ++steps_;

  if (h_next <= options_.breakdown_tol * column_scale_) {
    h_(j + 1, j) = 0.0;
    grade_ = steps_;
  } else {
    q_.col(j + 1) = work_ / h_next;
  }
  return true;
}

KrylovBasis ArnoldiProcess::basis() const {
  const Index n = steps_;
  const Index cols = grade_ ? n : n + 1;
  return KrylovBasis(op_.space(), q_.leftCols(cols), h_.topLeftCorner(n + 1, n), beta_, grade_);
}

KrylovBasis arnoldi(const LinearOperator& op, const CoefficientVector& g, Index n, ArnoldiOptions options) {
  ArnoldiProcess process(op, g, n, options);
  while (process.step()) {
  }
  return process.basis();
}

double distance_to_subspace(const CoefficientVector& v, const KrylovBasis& basis) {
  require_compatible(*v.space(), *basis.space(), "distance_to_subspace");
  const Space& space = *basis.space();
  ComplexVector r = v.values();
  // Two projection sweeps keep the result accurate when v is nearly inside span(Q).
  for (int pass = 0; pass < 2; ++pass) {
    for (Index i = 0; i < basis.size(); ++i) r -= space.inner(basis.vectors().col(i), r) * basis.vectors().col(i);
  }
  return std::min(space.norm(r), v.norm());
}

ComplexMatrix complement_basis(const KrylovBasis& basis, Index dim) {
  const Space& space = *basis.space();
  if (dim != space.dim()) throw std::invalid_argument("complement_basis: dimension mismatch");
  const Index n = basis.size();
  if (n >= dim) throw std::invalid_argument("complement_basis: basis already spans the truncation");
  // In Euclidean coordinates y = sqrt(W) x the basis is orthonormal, and the
  // trailing columns of the full Householder Q complete it.
  const ComplexVector s = space.sqrt_weights().cast<Complex>();
  ComplexMatrix scaled = s.asDiagonal() * basis.vectors();
  Eigen::HouseholderQR<ComplexMatrix> qr(scaled);
  ComplexMatrix full = qr.householderQ();
  ComplexMatrix comp = full.rightCols(dim - n);
  return s.cwiseInverse().asDiagonal() * comp;
}

double orthonormality_defect(const KrylovBasis& basis) {
  const Space& space = *basis.space();
  const auto q = basis.extended_vectors();
  ComplexMatrix gram(q.cols(), q.cols());
  for (Index j = 0; j < q.cols(); ++j) gram.col(j) = project(space, q, q.col(j));
  gram -= ComplexMatrix::Identity(q.cols(), q.cols());
  return gram.cwiseAbs().maxCoeff();
}

double arnoldi_relation_residual(const LinearOperator& op, const KrylovBasis& basis) {
  const Index n = basis.size();
  const auto& q = basis.extended_vectors();
  const auto& h = basis.hessenberg();
  const double scale = op.info().operator_norm.value_or(h.cwiseAbs().maxCoeff());
  ComplexVector aq(op.dim());
  double worst = 0.0;
  for (Index j = 0; j < n; ++j) {
    op.apply(ComplexVector(q.col(j)), aq);
    const Index rows = std::min<Index>(j + 2, q.cols());
    aq -= q.leftCols(rows) * h.col(j).head(rows);
    worst = std::max(worst, op.space()->norm(aq));
  }
  return scale > 0.0 ? worst / scale : worst;
}

}  // namespace kryspace
