#pragma once

#include <cmath>
#include <complex>
#include <random>

#include "kryspace/space.hpp"

namespace kryspace::testing {

// Seeded generator for property tests; each test owns its own stream.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double real(double lo = -1.0, double hi = 1.0) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  Complex complex() { return {real(), real()}; }
  Index index(Index lo, Index hi) { return std::uniform_int_distribution<Index>(lo, hi)(rng_); }

  ComplexVector vector(Index n) {
    ComplexVector v(n);
    for (Index i = 0; i < n; ++i) v(i) = complex();
    return v;
  }
  CoefficientVector element(const SpacePtr& space) { return CoefficientVector(space, vector(space->dim())); }

 private:
  std::mt19937_64 rng_;
};

inline double max_abs(const ComplexVector& v) { return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff(); }

}  // namespace kryspace::testing
