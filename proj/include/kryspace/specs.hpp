#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "kryspace/linear_operator.hpp"
#include "kryspace/operator_zoo.hpp"

namespace kryspace {

/// Command-line description of a zoo operator.
///
/// kind is one of mult, mult-masked, rshift, lshift, wrshift, bilateral,
/// volterra, fourier-conv, atheta.
struct OperatorSpec {
  std::string kind;
  std::string weights = "reciprocal:5";
  std::vector<Index> kernel;
  Index dim = 2500;
  Index grid = 2048;
  double theta = 0.7853981633974483;
};

/// `reciprocal:S` (sigma_n = 1/(S n)) or `explicit:a,b,c,...`.
WeightSequence parse_weights(std::string_view text);

/// Comma-separated one-based indices, e.g. `3,6,9`.
std::vector<Index> parse_index_list(std::string_view text);

const std::vector<std::string>& operator_kinds();

LinearOperator make_operator(const OperatorSpec& spec);

/// Datum for `krylov diagnose`:
///   basis:K        g = e_K
///   ones           g = (1, 1, ...)
///   monomial:P     g(x) = x^P / P! (grid operators only)
///   harmonic[:K]   g = A f with f_n = 1/n, n <= K (default 250)
///   linear         g = A f with f(x) = x
CoefficientVector make_datum(std::string_view text, const LinearOperator& op);

}  // namespace kryspace
