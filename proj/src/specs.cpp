#include "kryspace/specs.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>
#include <string>

#include "kryspace/experiments.hpp"

namespace kryspace {

namespace {

double parse_double(std::string_view text, const char* what) {
  std::string s(text);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw std::invalid_argument(std::string("cannot parse ") + what + ": '" + s + "'");
  return v;
}

Index parse_index(std::string_view text, const char* what) {
  Index v = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    throw std::invalid_argument(std::string("cannot parse ") + what + ": '" + std::string(text) + "'");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

}  // namespace

WeightSequence parse_weights(std::string_view text) {
  const auto colon = text.find(':');
  const std::string_view kind = text.substr(0, colon);
  const std::string_view arg = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  if (kind == "reciprocal") return WeightSequence::reciprocal(arg.empty() ? 5.0 : parse_double(arg, "scale"));
  if (kind == "explicit") {
    std::vector<double> values;
    for (auto part : split(arg, ',')) values.push_back(parse_double(part, "weight"));
    return WeightSequence::explicit_list(std::move(values));
  }
  throw std::invalid_argument("unknown weights '" + std::string(text) + "' (use reciprocal:S or explicit:a,b,...)");
}

std::vector<Index> parse_index_list(std::string_view text) {
  std::vector<Index> out;
  if (text.empty()) return out;
  for (auto part : split(text, ',')) out.push_back(parse_index(part, "index"));
  return out;
}

const std::vector<std::string>& operator_kinds() {
  static const std::vector<std::string> kinds{"mult",      "mult-masked", "rshift",       "lshift", "wrshift",
                                              "bilateral", "volterra",    "fourier-conv", "atheta"};
  return kinds;
}

LinearOperator make_operator(const OperatorSpec& spec) {
  const auto& k = spec.kind;
  if (k == "mult") return make_multiplication(parse_weights(spec.weights), spec.dim);
  if (k == "mult-masked") return make_masked_multiplication(parse_weights(spec.weights), spec.kernel, spec.dim);
  if (k == "rshift") return make_right_shift(spec.dim);
  if (k == "lshift") return make_left_shift(spec.dim);
  if (k == "wrshift") return make_weighted_right_shift(parse_weights(spec.weights), spec.dim);
  if (k == "bilateral") return make_bilateral_weighted_shift(parse_weights(spec.weights), spec.dim);
  if (k == "volterra") return make_volterra(spec.grid);
  if (k == "fourier-conv") {
    if (spec.dim < 3 || spec.dim % 2 == 0) throw std::invalid_argument("fourier-conv needs an odd --dim >= 3");
    return make_fourier_convolution((spec.dim - 1) / 2);
  }
  if (k == "atheta") return make_a_theta(spec.theta);
  throw std::invalid_argument("unknown operator '" + k + "'");
}

CoefficientVector make_datum(std::string_view text, const LinearOperator& op) {
  const auto colon = text.find(':');
  const std::string_view kind = text.substr(0, colon);
  const std::string_view arg = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  const SpacePtr& space = op.space();

  if (kind == "basis") return CoefficientVector::basis(space, parse_index(arg, "basis index"));
  if (kind == "ones") return CoefficientVector(space, ComplexVector::Ones(space->dim()));
  if (kind == "harmonic") {
    const Index cutoff = arg.empty() ? 250 : parse_index(arg, "cutoff");
    if (space->weighted()) throw std::invalid_argument("harmonic datum needs a sequence-space operator");
    return op.apply(harmonic_solution(space, cutoff));
  }
  if (kind == "linear" || kind == "monomial") {
    if (!space->weighted()) throw std::invalid_argument(std::string(kind) + " datum needs a grid operator");
    const RealVector& x = space->nodes();
    if (kind == "linear") return op.apply(CoefficientVector(space, x.cast<Complex>()));
    const Index p = parse_index(arg, "monomial degree");
    if (p < 0) throw std::invalid_argument("monomial degree must be nonnegative");
    const double factorial = std::tgamma(static_cast<double>(p) + 1.0);
    return CoefficientVector(space, (x.array().pow(static_cast<double>(p)) / factorial).matrix().cast<Complex>());
  }
  throw std::invalid_argument("unknown datum '" + std::string(text) + "'");
}

}  // namespace kryspace
