#pragma once

#include <optional>
#include <span>
#include <vector>

#include "symentropy/graph.hpp"
#include "symentropy/rational.hpp"
#include "symentropy/structure.hpp"

namespace symentropy {

inline constexpr int kEnumerationCap = 24;
inline constexpr int kOddCutCap = 20;

// Every inclusion-maximal independent set, in canonical (lex_less) order.
std::vector<VertexSet> maximal_independent_sets(const Graph& g);

template <class W>
struct WeightedSet {
  VertexSet set;
  W weight{};
};

// Branch-and-bound with a greedy clique-partition upper bound. Ties go to
// the lex-smallest set; double weights count as tied within 1e-12
// (relative), rational weights only when equal.
WeightedSet<double> max_weight_independent_set(const Graph& g, std::span<const double> weights);
WeightedSet<Rational> max_weight_independent_set(const Graph& g, std::span<const Rational> weights);

int independence_number(const Graph& g);

struct MaximumCliques {
  int omega = 0;
  std::vector<VertexSet> cliques;  // every clique of size omega, canonical order
};

MaximumCliques maximum_cliques(const Graph& g);

// Maximum-cardinality matching by augmenting paths.
std::vector<Edge> maximum_matching_bipartite(const Graph& g, const Bipartition& parts);

// Partition of V(G) into disjoint cliques of size omega(G).
using CliqueCover = std::vector<VertexSet>;

std::optional<CliqueCover> clique_cover_by_max_cliques(const Graph& g);

// Disjoint, exhaustive, every part a clique of size `omega`.
bool is_valid_clique_cover(const Graph& g, const CliqueCover& cover, int omega);

int cut_size(const Graph& g, VertexSet u);      // |delta(U)|
int edges_inside(const Graph& g, VertexSet u);  // |E[U]|

struct OddCutScan {
  bool holds = true;
  std::optional<VertexSet> witness;  // odd U of minimum |delta(U)| when !holds
  int witness_cut = 0;
};

// Exhaustive over odd U (singletons and U = V included); n <= 20.
OddCutScan all_odd_cuts_at_least(const Graph& g, int k);

// Exact chromatic number by backtracking; n <= 24.
int chromatic_number(const Graph& g);

}  // namespace symentropy
