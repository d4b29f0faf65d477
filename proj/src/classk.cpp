#include "kryspace/classk.hpp"

#include <cmath>
#include <stdexcept>

namespace kryspace {

Complex PolySeries::evaluate(Complex z) const {
  Complex acc = 0.0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * (z - center) + *it;
  return acc;
}

Complex PolySeries::remainder(Complex z) const {
  const Complex ratio = (z - center) / center;
  const Complex sign = (degree + 1) % 2 == 0 ? 1.0 : -1.0;
  return sign * std::pow(ratio, static_cast<int>(degree + 1)) / z;
}

double PolySeries::remainder_bound(double radius) const {
  const double c = std::abs(center);
  if (!(radius >= 0.0) || radius >= c) throw std::invalid_argument("remainder_bound: need 0 <= radius < |center|");
  return std::pow(radius / c, static_cast<double>(degree + 1)) / (c - radius);
}

PolySeries inverse_poly(Complex center, Index degree) {
  if (center == Complex(0.0)) throw std::invalid_argument("inverse_poly: center must be nonzero");
  if (degree < 0) throw std::invalid_argument("inverse_poly: degree must be nonnegative");
  PolySeries p{center, degree, {}};
  p.coefficients.reserve(static_cast<std::size_t>(degree + 1));
  Complex a = 1.0 / center;
  for (Index k = 0; k <= degree; ++k) {
    p.coefficients.push_back(a);
    a *= -1.0 / center;
  }
  return p;
}

CoefficientVector apply_poly(const LinearOperator& op, const PolySeries& p, const CoefficientVector& g) {
  require_compatible(*op.space(), *g.space(), "apply_poly");
  if (p.coefficients.empty()) return CoefficientVector(op.space());
  const ComplexVector& gv = g.values();
  ComplexVector acc = p.coefficients.back() * gv;
  ComplexVector tmp(op.dim());
  for (auto k = static_cast<Index>(p.coefficients.size()) - 2; k >= 0; --k) {
    op.apply(acc, tmp);
    acc = tmp - p.center * acc + p.coefficients[static_cast<std::size_t>(k)] * gv;
  }
  return CoefficientVector(op.space(), std::move(acc));
}

std::vector<ClassKRow> classk_error_curve(const LinearOperator& op, const CoefficientVector& g,
                                          const CoefficientVector& reference, Complex center, Index degree_max) {
  if (degree_max < 0) throw std::invalid_argument("classk_error_curve: degree_max must be nonnegative");
  require_compatible(*op.space(), *reference.space(), "classk_error_curve");
  std::vector<ClassKRow> rows;
  rows.reserve(static_cast<std::size_t>(degree_max + 1));
  for (Index n = 0; n <= degree_max; ++n) {
    const CoefficientVector approx = apply_poly(op, inverse_poly(center, n), g);
    rows.push_back({n, (approx - reference).norm(), (g - op.apply(approx)).norm(), approx.norm()});
  }
  return rows;
}

double fitted_log_slope(const std::vector<ClassKRow>& rows, Index first, Index last) {
  if (first < 0 || last >= static_cast<Index>(rows.size()) || last - first < 1) {
    throw std::invalid_argument("fitted_log_slope: need at least two rows in range");
  }
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  const double count = static_cast<double>(last - first + 1);
  for (Index i = first; i <= last; ++i) {
    const auto& row = rows[static_cast<std::size_t>(i)];
    if (!(row.error_norm > 0.0)) throw std::invalid_argument("fitted_log_slope: error must be positive");
    const double x = static_cast<double>(row.degree);
    const double y = std::log(row.error_norm);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (count * sxy - sx * sy) / (count * sxx - sx * sx);
}

}  // namespace kryspace
