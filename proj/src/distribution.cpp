#include "symentropy/distribution.hpp"

#include <cmath>
#include <numeric>

#include "symentropy/errors.hpp"

namespace symentropy {

Distribution Distribution::uniform(int n) {
  if (n <= 0) fail(ErrorCode::kEmptyInput, "uniform distribution on no vertices");
  return from_rationals(std::vector<Rational>(n, make_rational(1, n)));
}

Distribution Distribution::from_rationals(std::vector<Rational> weights) {
  if (weights.empty()) fail(ErrorCode::kEmptyInput, "empty distribution");
  Rational total = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] < 0) {
      fail(ErrorCode::kNegativeEntry, "entry " + std::to_string(i) + " is negative");
    }
    total += weights[i];
  }
  if (total != 1) fail(ErrorCode::kSumNotOne, "weights sum to " + to_fraction_string(total));
  Distribution d;
  d.weights_.reserve(weights.size());
  for (const Rational& w : weights) d.weights_.push_back(to_double(w));
  d.exact_ = std::move(weights);
  return d;
}

Distribution Distribution::from_doubles(std::vector<double> weights, double tolerance) {
  if (weights.empty()) fail(ErrorCode::kEmptyInput, "empty distribution");
  double total = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (!std::isfinite(weights[i])) fail(ErrorCode::kDomainError, "non-finite entry");
    if (weights[i] < 0) {
      fail(ErrorCode::kNegativeEntry, "entry " + std::to_string(i) + " is negative");
    }
    total += weights[i];
  }
  if (std::abs(total - 1.0) > tolerance) {
    fail(ErrorCode::kSumNotOne, "weights sum to " + std::to_string(total));
  }
  Distribution d;
  d.weights_ = std::move(weights);
  return d;
}

const std::vector<Rational>& Distribution::exact_weights() const {
  if (!exact_) fail(ErrorCode::kDomainError, "distribution is not in exact mode");
  return *exact_;
}

double Distribution::mass(VertexSet s) const {
  double total = 0.0;
  s.for_each([&](Vertex v) { total += weights_[v]; });
  return total;
}

Rational Distribution::exact_mass(VertexSet s) const {
  Rational total = 0;
  const auto& w = exact_weights();
  s.for_each([&](Vertex v) { total += w[v]; });
  return total;
}

Distribution Distribution::conditioned_on(std::span<const int> part) const {
  if (exact_) {
    Rational total = 0;
    for (int v : part) total += (*exact_)[v];
    if (total == 0) fail(ErrorCode::kDomainError, "conditioning on a zero-mass part");
    std::vector<Rational> out;
    for (int v : part) out.push_back((*exact_)[v] / total);
    return from_rationals(std::move(out));
  }
  double total = 0.0;
  for (int v : part) total += weights_[v];
  if (total <= 0.0) fail(ErrorCode::kDomainError, "conditioning on a zero-mass part");
  std::vector<double> out;
  for (int v : part) out.push_back(weights_[v] / total);
  return from_doubles(std::move(out), 1e-9);
}

}  // namespace symentropy
