#include "kryspace/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "kryspace/errors.hpp"

namespace kryspace {

std::vector<DefectPoint> reducibility_defect(const LinearOperator& op, const CoefficientVector& g, Index n,
                                             ReducibilityOptions options) {
  if (!op.info().normal && !options.allow_non_normal) {
    throw UnsupportedOperator("reducibility_defect: '" + op.info().name +
                              "' is not normal; the A*g criterion does not characterise reducibility");
  }
  return reducibility_defect(op, g, arnoldi(op, g, n, options.arnoldi), options);
}

std::vector<DefectPoint> reducibility_defect(const LinearOperator& op, const CoefficientVector& g,
                                             const KrylovBasis& basis, ReducibilityOptions options) {
  if (!op.info().normal && !options.allow_non_normal) {
    throw UnsupportedOperator("reducibility_defect: '" + op.info().name +
                              "' is not normal; the A*g criterion does not characterise reducibility");
  }
  require_compatible(*op.space(), *basis.space(), "reducibility_defect");
  const Space& space = *op.space();
  ComplexVector r = op.adjoint_apply(g).values();
  std::vector<DefectPoint> ladder;
  ladder.reserve(static_cast<std::size_t>(basis.size()));
  double previous = space.norm(r);
  for (Index i = 0; i < basis.size(); ++i) {
    const auto q = basis.vectors().col(i);
    // Projecting twice against q_i keeps the running residual orthogonal to it.
    for (int pass = 0; pass < 2; ++pass) r -= space.inner(q, r) * q;
    previous = std::min(previous, space.norm(r));
    ladder.push_back({i + 1, previous});
  }
  return ladder;
}

IntersectionIndicator intersection_indicator(const LinearOperator& op, const KrylovBasis& basis, Index dim) {
  return intersection_indicator(op, basis, complement_basis(basis, dim));
}

IntersectionIndicator intersection_indicator(const LinearOperator& op, const KrylovBasis& basis,
                                             const ComplexMatrix& complement) {
  require_compatible(*op.space(), *basis.space(), "intersection_indicator");
  const Space& space = *op.space();
  if (complement.rows() != space.dim()) throw std::invalid_argument("intersection_indicator: complement rows");
  IntersectionIndicator out;
  if (complement.cols() == 0) {
    out.notes = "empty complement: the Krylov space fills the truncation";
    return out;
  }

  // Work in Euclidean coordinates sqrt(W) x, where both bases are orthonormal.
  const ComplexVector s = space.sqrt_weights().cast<Complex>();
  ComplexMatrix image(space.dim(), complement.cols());
  ComplexVector tmp(space.dim());
  for (Index j = 0; j < complement.cols(); ++j) {
    op.apply(ComplexVector(complement.col(j)), tmp);
    image.col(j) = s.cwiseProduct(tmp);
  }
  const double scale = image.colwise().norm().maxCoeff();
  if (scale == 0.0) {
    out.notes = "A maps the complement to zero; the image is trivial";
    return out;
  }
  Eigen::ColPivHouseholderQR<ComplexMatrix> qr(image);
  qr.setThreshold(1e-12);
  out.image_rank = qr.rank();
  if (out.image_rank == 0) {
    out.notes = "image of the complement is numerically zero";
    return out;
  }
  ComplexMatrix w = ComplexMatrix(qr.householderQ()).leftCols(out.image_rank);
  ComplexMatrix q = s.asDiagonal() * basis.vectors();
  ComplexMatrix cosines = q.adjoint() * w;
  Eigen::JacobiSVD<ComplexMatrix> svd(cosines);
  out.max_cosine = std::clamp(svd.singularValues().size() > 0 ? svd.singularValues()(0) : 0.0, 0.0, 1.0);
  if (out.image_rank < complement.cols()) {
    std::ostringstream msg;
    msg << "image of the complement has rank " << out.image_rank << " < " << complement.cols();
    out.notes = msg.str();
  }
  return out;
}

KernelErrorProfile kernel_error_profile(const CoefficientVector& error, const std::vector<Index>& kernel_indices,
                                        double tol) {
  KernelErrorProfile out;
  std::vector<bool> is_kernel(static_cast<std::size_t>(error.size()), false);
  for (Index n : kernel_indices) {
    if (n < 1 || n > error.size()) throw std::invalid_argument("kernel_error_profile: index out of range");
    is_kernel[static_cast<std::size_t>(n - 1)] = true;
    out.on_kernel.emplace_back(n, std::abs(error.at(n)));
  }
  std::sort(out.on_kernel.begin(), out.on_kernel.end());
  out.on_kernel.erase(std::unique(out.on_kernel.begin(), out.on_kernel.end()), out.on_kernel.end());
  for (Index i = 0; i < error.size(); ++i) {
    if (!is_kernel[static_cast<std::size_t>(i)]) out.off_kernel_max = std::max(out.off_kernel_max, std::abs(error.values()(i)));
  }
  out.supported_on_kernel = out.off_kernel_max <= tol;
  return out;
}

CoefficientVector krylov_solution_projection(const CoefficientVector& f, const KrylovBasis& basis) {
  require_compatible(*f.space(), *basis.space(), "krylov_solution_projection");
  ComplexVector c = basis.coefficients(f.values(), basis.size());
  return CoefficientVector(basis.space(), basis.vectors() * c);
}

DiagnosticsReport diagnose(const LinearOperator& op, const CoefficientVector& g, Index n, DiagnoseOptions options) {
  DiagnosticsReport report;
  std::ostringstream notes;
  const KrylovBasis basis = arnoldi(op, g, n, options.arnoldi);
  notes << "operator " << op.info().name << ", D = " << op.dim() << ", Krylov dimension " << basis.size();
  if (basis.grade()) notes << " (grade reached)";
  notes << "\n";

  if (op.info().normal || options.allow_non_normal) {
    ReducibilityOptions ro{options.allow_non_normal, options.arnoldi};
    report.reducibility_defect = reducibility_defect(op, g, basis, ro);
    if (!op.info().normal) notes << "operator not normal: a vanishing defect is necessary, not sufficient\n";
  } else {
    notes << "operator not normal: reducibility ladder skipped\n";
  }

  if (basis.size() < op.dim() && op.dim() <= options.max_intersection_dim) {
    const auto ind = intersection_indicator(op, basis, op.dim());
    report.intersection_max_cosine = ind.max_cosine;
    if (!ind.notes.empty()) notes << ind.notes << "\n";
  } else if (basis.size() >= op.dim()) {
    notes << "Krylov space fills the truncation: intersection indicator not defined\n";
  } else {
    notes << "truncation larger than " << options.max_intersection_dim << ": intersection indicator skipped\n";
  }
  report.notes = notes.str();
  return report;
}

}  // namespace kryspace
