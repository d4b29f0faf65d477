#pragma once

#include <stdexcept>
#include <string>

namespace kryspace {

// Invalid arguments are reported with std::invalid_argument throughout.

/// A computation could not be completed in floating point (rank deficiency,
/// loss of orthogonality, non-finite data).
class NumericalFailure : public std::runtime_error {
 public:
  explicit NumericalFailure(const std::string& what) : std::runtime_error(what) {}
};

/// The operator does not satisfy the hypothesis a diagnostic relies on.
class UnsupportedOperator : public std::logic_error {
 public:
  explicit UnsupportedOperator(const std::string& what) : std::logic_error(what) {}
};

}  // namespace kryspace
