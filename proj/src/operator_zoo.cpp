#include "kryspace/operator_zoo.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace kryspace {

namespace {

void require_positive_dim(Index dim, const char* what) {
  if (dim <= 0) throw std::invalid_argument(std::string(what) + ": dimension must be positive");
}

RealVector sample_weights(const WeightSequence& weights, Index count) {
  if (auto n = weights.available(); n && *n < count) {
    throw std::invalid_argument("weight list has " + std::to_string(*n) + " entries, " + std::to_string(count) +
                                " needed");
  }
  RealVector w(count);
  for (Index n = 1; n <= count; ++n) w(n - 1) = weights.at(n);
  return w;
}

LinearOperator diagonal_operator(ComplexVector entries, SpacePtr space, OperatorInfo info) {
  auto forward = [d = entries](const ComplexVector& in, ComplexVector& out) { out = d.cwiseProduct(in); };
  auto adjoint = [d = entries.conjugate().eval()](const ComplexVector& in, ComplexVector& out) {
    out = d.cwiseProduct(in);
  };
  return LinearOperator(std::move(space), forward, adjoint, std::move(info));
}

}  // namespace

WeightSequence WeightSequence::explicit_list(std::vector<double> values) {
  for (double v : values) {
    if (!(v > 0.0) || !std::isfinite(v)) throw std::invalid_argument("weights must be positive and finite");
  }
  WeightSequence w;
  w.values_ = std::move(values);
  return w;
}

WeightSequence WeightSequence::reciprocal(double scale) {
  if (!(scale > 0.0) || !std::isfinite(scale)) throw std::invalid_argument("reciprocal scale must be positive");
  WeightSequence w;
  w.scale_ = scale;
  w.reciprocal_ = true;
  return w;
}

double WeightSequence::at(Index n) const {
  if (n < 1) throw std::invalid_argument("weights are indexed from 1");
  if (reciprocal_) return 1.0 / (scale_ * static_cast<double>(n));
  if (n > static_cast<Index>(values_.size())) throw std::invalid_argument("weight index beyond explicit list");
  return values_[static_cast<std::size_t>(n - 1)];
}

std::optional<Index> WeightSequence::available() const {
  if (reciprocal_) return std::nullopt;
  return static_cast<Index>(values_.size());
}

bool WeightSequence::strictly_decreasing(Index count) const {
  for (Index n = 1; n < count; ++n) {
    if (!(at(n + 1) < at(n))) return false;
  }
  return true;
}

double WeightSequence::sup(Index count) const {
  double s = 0.0;
  for (Index n = 1; n <= count; ++n) s = std::max(s, at(n));
  return s;
}

LinearOperator make_multiplication(const WeightSequence& weights, Index dim) {
  require_positive_dim(dim, "make_multiplication");
  RealVector w = sample_weights(weights, dim);
  OperatorInfo info{.name = "mult", .operator_norm = w.maxCoeff(), .kernel_indices = {}, .self_adjoint = true,
                    .normal = true};
  return diagonal_operator(w.cast<Complex>(), Space::sequence(dim), std::move(info));
}

LinearOperator make_masked_multiplication(const WeightSequence& weights, std::span<const Index> zero_set, Index dim) {
  require_positive_dim(dim, "make_masked_multiplication");
  RealVector w = sample_weights(weights, dim);
  std::vector<Index> kernel(zero_set.begin(), zero_set.end());
  std::sort(kernel.begin(), kernel.end());
  kernel.erase(std::unique(kernel.begin(), kernel.end()), kernel.end());
  for (Index n : kernel) {
    if (n < 1 || n > dim) {
      throw std::invalid_argument("kernel index " + std::to_string(n) + " outside 1.." + std::to_string(dim));
    }
    w(n - 1) = 0.0;
  }
  OperatorInfo info{.name = "mult-masked", .operator_norm = w.maxCoeff(), .kernel_indices = std::move(kernel),
                    .self_adjoint = true, .normal = true};
  return diagonal_operator(w.cast<Complex>(), Space::sequence(dim), std::move(info));
}

LinearOperator make_diagonal(ComplexVector entries, SpacePtr space) {
  if (!space || entries.size() != space->dim()) throw std::invalid_argument("make_diagonal: dimension mismatch");
  OperatorInfo info;
  info.name = "diagonal";
  info.operator_norm = entries.size() > 0 ? entries.cwiseAbs().maxCoeff() : 0.0;
  info.self_adjoint = entries.imag().isZero(0.0);
  info.normal = true;
  for (Index i = 0; i < entries.size(); ++i) {
    if (entries(i) == Complex(0.0)) info.kernel_indices.push_back(i + 1);
  }
  return diagonal_operator(std::move(entries), std::move(space), std::move(info));
}

LinearOperator make_identity(Index dim) {
  require_positive_dim(dim, "make_identity");
  auto op = make_diagonal(ComplexVector::Ones(dim), Space::sequence(dim));
  auto info = op.info();
  info.name = "identity";
  return LinearOperator(op.space(), [](const ComplexVector& in, ComplexVector& out) { out = in; },
                        [](const ComplexVector& in, ComplexVector& out) { out = in; }, info);
}

LinearOperator make_matrix(ComplexMatrix matrix, std::string name) {
  if (matrix.rows() != matrix.cols() || matrix.rows() == 0) throw std::invalid_argument("make_matrix: need square");
  const Index dim = matrix.rows();
  OperatorInfo info;
  info.name = std::move(name);
  info.self_adjoint = matrix.isApprox(matrix.adjoint(), 1e-14);
  info.normal = (matrix * matrix.adjoint()).isApprox(matrix.adjoint() * matrix, 1e-14);
  info.operator_norm = Eigen::JacobiSVD<ComplexMatrix>(matrix).singularValues()(0);
  ComplexMatrix adj = matrix.adjoint();
  return LinearOperator(
      Space::sequence(dim), [m = std::move(matrix)](const ComplexVector& in, ComplexVector& out) { out.noalias() = m * in; },
      [m = std::move(adj)](const ComplexVector& in, ComplexVector& out) { out.noalias() = m * in; }, std::move(info));
}

LinearOperator make_a_theta(double theta) {
  ComplexMatrix a(2, 2);
  a << 1.0, std::cos(theta), 0.0, std::sin(theta);
  return make_matrix(std::move(a), "atheta");
}

LinearOperator make_right_shift(Index dim) {
  if (dim < 2) throw std::invalid_argument("make_right_shift: dimension must be at least 2");
  OperatorInfo info{.name = "rshift", .operator_norm = 1.0, .kernel_indices = {}, .self_adjoint = false,
                    .normal = false};
  auto right = [](const ComplexVector& in, ComplexVector& out) {
    const Index d = in.size();
    out(0) = 0.0;
    out.tail(d - 1) = in.head(d - 1);
  };
  auto left = [](const ComplexVector& in, ComplexVector& out) {
    const Index d = in.size();
    out.head(d - 1) = in.tail(d - 1);
    out(d - 1) = 0.0;
  };
  return LinearOperator(Space::sequence(dim), right, left, std::move(info));
}

LinearOperator make_left_shift(Index dim) {
  if (dim < 2) throw std::invalid_argument("make_left_shift: dimension must be at least 2");
  auto r = make_right_shift(dim);
  OperatorInfo info{.name = "lshift", .operator_norm = 1.0, .kernel_indices = {1}, .self_adjoint = false,
                    .normal = false};
  return LinearOperator(
      r.space(), [r](const ComplexVector& in, ComplexVector& out) { r.adjoint_apply(in, out); },
      [r](const ComplexVector& in, ComplexVector& out) { r.apply(in, out); }, std::move(info));
}

LinearOperator make_weighted_right_shift(const WeightSequence& weights, Index dim) {
  if (dim < 2) throw std::invalid_argument("make_weighted_right_shift: dimension must be at least 2");
  if (!weights.strictly_decreasing(std::min<Index>(dim, weights.available().value_or(dim)))) {
    throw std::invalid_argument("make_weighted_right_shift: weights must be strictly decreasing");
  }
  // Only sigma_1 .. sigma_{D-1} act inside the truncation.
  ComplexVector sigma = sample_weights(weights, dim - 1).cast<Complex>();
  OperatorInfo info{.name = "wrshift", .operator_norm = weights.at(1), .kernel_indices = {}, .self_adjoint = false,
                    .normal = false};
  auto right = [sigma](const ComplexVector& in, ComplexVector& out) {
    const Index d = in.size();
    out(0) = 0.0;
    out.tail(d - 1) = sigma.cwiseProduct(in.head(d - 1));
  };
  auto left = [sigma](const ComplexVector& in, ComplexVector& out) {
    const Index d = in.size();
    out.head(d - 1) = sigma.cwiseProduct(in.tail(d - 1));
    out(d - 1) = 0.0;
  };
  return LinearOperator(Space::sequence(dim), right, left, std::move(info));
}

Index bilateral_slot(Index n) { return n > 0 ? 2 * n : -2 * n + 1; }

Index bilateral_index(Index slot) {
  if (slot < 1) throw std::invalid_argument("bilateral_index: slots are one-based");
  return slot % 2 == 0 ? slot / 2 : -(slot - 1) / 2;
}

LinearOperator make_bilateral_weighted_shift(const WeightSequence& weights, Index dim) {
  if (dim < 3 || dim % 2 == 0) throw std::invalid_argument("make_bilateral_weighted_shift: dimension must be odd, >= 3");
  const Index half = (dim - 1) / 2;
  if (!weights.strictly_decreasing(std::min<Index>(half + 1, weights.available().value_or(half + 1)))) {
    throw std::invalid_argument("make_bilateral_weighted_shift: weights must be strictly decreasing");
  }
  // Link k joins index n = k - half (source) to n + 1 (target), n = -half .. half-1.
  const Index links = dim - 1;
  std::vector<Index> source(static_cast<std::size_t>(links));
  std::vector<Index> target(static_cast<std::size_t>(links));
  ComplexVector sigma(links);
  for (Index k = 0; k < links; ++k) {
    const Index n = k - half;
    source[static_cast<std::size_t>(k)] = bilateral_slot(n) - 1;
    target[static_cast<std::size_t>(k)] = bilateral_slot(n + 1) - 1;
    sigma(k) = weights.at(std::abs(n) + 1);
  }
  auto right = [source, target, sigma](const ComplexVector& in, ComplexVector& out) {
    out.setZero();
    for (std::size_t k = 0; k < source.size(); ++k) out(target[k]) = sigma(static_cast<Index>(k)) * in(source[k]);
  };
  auto left = [source, target, sigma](const ComplexVector& in, ComplexVector& out) {
    out.setZero();
    for (std::size_t k = 0; k < source.size(); ++k) out(source[k]) = sigma(static_cast<Index>(k)) * in(target[k]);
  };
  // L R multiplies e_n by sigma_{|n|}^2 but R L by sigma_{|n-1|}^2: not normal.
  OperatorInfo info{.name = "bilateral", .operator_norm = weights.at(1), .kernel_indices = {},
                    .self_adjoint = false, .normal = false};
  return LinearOperator(Space::sequence(dim), right, left, std::move(info));
}

LinearOperator make_volterra(Index points) {
  if (points < 16) throw std::invalid_argument("make_volterra: need at least 16 grid points");
  auto space = Space::uniform_grid(points);
  const double h = 1.0 / static_cast<double>(points - 1);
  auto forward = [h](const ComplexVector& in, ComplexVector& out) {
    const Index m = in.size();
    out(0) = 0.0;
    for (Index i = 1; i < m; ++i) out(i) = out(i - 1) + 0.5 * h * (in(i - 1) + in(i));
  };
  // W^{-1} V^H W: reversed cumulative trapezoid in the interior, with the
  // endpoint rows fixed by the half weights.
  auto adjoint = [h, w = space->weights()](const ComplexVector& in, ComplexVector& out) {
    const Index m = in.size();
    Complex suffix = 0.0;  // sum_{i > j} w_i u_i
    out(m - 1) = 0.5 * h * in(m - 1);
    suffix = w(m - 1) * in(m - 1);
    for (Index j = m - 2; j >= 1; --j) {
      out(j) = 0.5 * h * in(j) + suffix;
      suffix += w(j) * in(j);
    }
    out(0) = suffix;
  };
  OperatorInfo info{.name = "volterra", .operator_norm = 2.0 / std::numbers::pi, .kernel_indices = {},
                    .self_adjoint = false, .normal = false};
  return LinearOperator(std::move(space), forward, adjoint, std::move(info));
}

Complex fourier_symbol(Index n) {
  if (n == 0) return 0.0;
  constexpr double pi = std::numbers::pi;
  const double nd = static_cast<double>(n);
  return 1.0 / Complex(1.0 + (1.0 - 4.0 * nd * nd) * pi * pi, 4.0 * pi * nd);
}

LinearOperator make_fourier_convolution(Index n_modes) {
  if (n_modes < 1) throw std::invalid_argument("make_fourier_convolution: need at least one mode");
  const Index dim = 2 * n_modes + 1;
  ComplexVector c(dim);
  for (Index slot = 1; slot <= dim; ++slot) c(slot - 1) = fourier_symbol(bilateral_index(slot));
  OperatorInfo info{.name = "fourier-conv", .operator_norm = std::abs(fourier_symbol(1)),
                    .kernel_indices = {bilateral_slot(0)}, .self_adjoint = false, .normal = true};
  return diagonal_operator(std::move(c), Space::sequence(dim), std::move(info));
}

}  // namespace kryspace
