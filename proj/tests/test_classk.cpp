#include <doctest.h>

#include <cmath>

#include "kryspace/arnoldi.hpp"
#include "kryspace/classk.hpp"
#include "kryspace/experiments.hpp"
#include "kryspace/gmres.hpp"
#include "kryspace/operator_zoo.hpp"
#include "support.hpp"

using namespace kryspace;
using kryspace::testing::Gen;

TEST_CASE("series coefficients and exact values") {
  const auto p0 = inverse_poly(1.0, 0);
  CHECK(p0.evaluate(1.0) == Complex(1.0));

  const Complex c(1.5, 0.25);
  const auto p = inverse_poly(c, 12);
  REQUIRE(p.coefficients.size() == 13);
  for (Index k = 0; k <= 12; ++k) {
    const Complex expected = (k % 2 == 0 ? 1.0 : -1.0) / std::pow(c, static_cast<double>(k + 1));
    CHECK(std::abs(p.coefficients[static_cast<std::size_t>(k)] - expected) <= 1e-15);
  }
  for (Index n = 0; n <= 20; ++n) CHECK(std::abs(inverse_poly(c, n).evaluate(c) - 1.0 / c) <= 1e-15);

  CHECK_THROWS_AS(inverse_poly(0.0, 3), std::invalid_argument);
  CHECK_THROWS_AS(inverse_poly(1.0, -1), std::invalid_argument);
}

TEST_CASE("closed-form remainder matches 1/z - p_n(z)") {
  Gen gen(13);
  for (int trial = 0; trial < 200; ++trial) {
    const Complex c(gen.real(1.0, 3.0), gen.real(-1.0, 1.0));
    const Index n = gen.index(0, 25);
    const Complex z = c + 0.5 * std::abs(c) * Complex(gen.real(), gen.real()) / std::sqrt(2.0);
    const auto p = inverse_poly(c, n);
    CHECK(std::abs(p.remainder(z) - (1.0 / z - p.evaluate(z))) <= 1e-12 * std::abs(1.0 / z));
  }
}

TEST_CASE("remainder bound on [1, 2] about 3/2 by dense sampling") {
  for (Index n = 0; n <= 30; ++n) {
    const auto p = inverse_poly(1.5, n);
    double worst = 0.0;
    for (int k = 0; k <= 2000; ++k) {
      const double z = 1.0 + k / 2000.0;
      worst = std::max(worst, std::abs(1.0 / z - p.evaluate(z)));
    }
    CAPTURE(n);
    // Additive slack covers roundoff in evaluating p_n near |p_n| ~ 1; the bound is attained at z = 1.
    CHECK(worst <= std::pow(1.0 / 3.0, static_cast<double>(n + 1)) + 1e-14);
    CHECK(worst <= p.remainder_bound(0.5) + 1e-14);
  }
}

TEST_CASE("scalar operator is inverted exactly") {
  Gen gen(21);
  const Complex c(2.0, -1.0);
  const auto space = Space::sequence(9);
  const auto op = make_diagonal(ComplexVector::Constant(9, c), space);
  const auto g = gen.element(space);
  for (Index n = 0; n <= 6; ++n) {
    const auto out = apply_poly(op, inverse_poly(c, n), g);
    CHECK((out - (1.0 / c) * g).norm() <= 1e-15 * g.norm());
  }
}

TEST_CASE("diagonal test: error bound, ratio, membership and GMRES dominance") {
  const Index d = 101;
  const auto a = make_classk_diagonal(d);
  Gen gen(77);
  const auto g = gen.element(a.space());
  CoefficientVector exact(a.space());
  ComplexVector eig(d);
  for (Index i = 0; i < d; ++i) {
    eig(i) = a.apply(CoefficientVector::basis(a.space(), i + 1)).at(i + 1);
    exact.values()(i) = g.values()(i) / eig(i);
  }
  CHECK(eig.real().minCoeff() >= 1.0);
  CHECK(eig.real().maxCoeff() <= 2.0);

  const auto rows = classk_error_curve(a, g, exact, 1.5, 30);
  REQUIRE(rows.size() == 31);
  for (const auto& row : rows) {
    CAPTURE(row.degree);
    CHECK(row.error_norm <= std::pow(1.0 / 3.0, static_cast<double>(row.degree + 1)) * g.norm());
  }
  for (Index n = 2; n < 20; ++n) {
    const double ratio = rows[static_cast<std::size_t>(n + 1)].error_norm / rows[static_cast<std::size_t>(n)].error_norm;
    CHECK(ratio == doctest::Approx(1.0 / 3.0).epsilon(0.05));
  }
  CHECK(std::abs(fitted_log_slope(rows, 5, 25) - std::log(1.0 / 3.0)) <= 0.05);

  const auto basis = arnoldi(a, g, 31);
  const auto trace = gmres_solve(a, g, 31, exact);
  const double norm = *a.info().operator_norm;
  for (Index n = 0; n <= 20; ++n) {
    const auto out = apply_poly(a, inverse_poly(1.5, n), g);
    CHECK(distance_to_subspace(out, basis.leading(n + 1)) <= 1e-10 * out.norm());
    CHECK(trace.rows[static_cast<std::size_t>(n)].residual_norm <=
          norm * rows[static_cast<std::size_t>(n)].error_norm * (1.0 + 1e-10) + 1e-15);
  }
}
