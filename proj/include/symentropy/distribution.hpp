#pragma once

#include <optional>
#include <span>
#include <vector>

#include "symentropy/rational.hpp"
#include "symentropy/vertex_set.hpp"

namespace symentropy {

// Probability vector over the vertices of a graph (or the edges of a root
// graph). Exact mode keeps rationals alongside their double images; float
// mode keeps only doubles.
class Distribution {
 public:
  static constexpr double kFloatTolerance = 1e-12;

  Distribution() = default;

  static Distribution uniform(int n);
  static Distribution from_rationals(std::vector<Rational> weights);
  static Distribution from_doubles(std::vector<double> weights,
                                   double tolerance = kFloatTolerance);

  int size() const { return static_cast<int>(weights_.size()); }
  bool exact() const { return exact_.has_value(); }
  double operator[](int i) const { return weights_[i]; }
  std::span<const double> weights() const { return weights_; }
  const std::vector<Rational>& exact_weights() const;

  double mass(VertexSet s) const;
  Rational exact_mass(VertexSet s) const;

  // Restriction to `part`, divided by its mass. Requires positive mass.
  Distribution conditioned_on(std::span<const int> part) const;

 private:
  std::vector<double> weights_;
  std::optional<std::vector<Rational>> exact_;
};

}  // namespace symentropy
