#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "symentropy/combinatorics.hpp"
#include "symentropy/graph.hpp"
#include "symentropy/rational.hpp"

namespace symentropy {

inline constexpr int kFractionalCap = 20;

// Nonnegative weights on independent sets covering every vertex at least once.
using FractionalColoring = std::vector<std::pair<VertexSet, Rational>>;

struct FractionalChromatic {
  Rational value;
  FractionalColoring coloring;
  // Optimal dual: vertex weights with every independent set carrying at
  // most 1 and total equal to `value`.
  std::vector<Rational> vertex_weights;
};

// Exact optimum of the covering LP over all maximal independent sets,
// solved as its packing dual by rational simplex with Bland's rule.
// Both the coloring and the dual are re-verified before returning.
FractionalChromatic fractional_chromatic_number(const Graph& g);

bool is_valid_fractional_coloring(const Graph& g, const FractionalColoring& coloring, const Rational& total);

struct FractionalEdgeChromatic {
  Rational value;
  // The U attaining the maximum ratio, or nullopt when max degree wins.
  std::optional<VertexSet> witness;
};

// max{ Delta, max over |U| >= 3 of |E(U)| / floor(|U|/2) }, scanning every
// subset with at least three vertices; n <= 20, m >= 1.
FractionalEdgeChromatic fractional_edge_chromatic_number(const Graph& g1);

struct KGraphCheck {
  bool is_k_graph = false;
  std::optional<int> k;  // regular degree, when regular
  std::optional<FractionalEdgeChromatic> edge_chromatic;
  std::optional<OddCutScan> odd_cuts;
};

// Regularity, then both the Edmonds formula and the odd-cut criterion;
// the two routes must agree.
KGraphCheck is_k_graph(const Graph& g1);

}  // namespace symentropy
