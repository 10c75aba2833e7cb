#pragma once

#include <optional>
#include <vector>

#include "symentropy/distribution.hpp"
#include "symentropy/graph.hpp"

namespace symentropy {

inline constexpr int kColoringCap = 18;

// Cells are sorted by lex_less; masses follow the cells.
struct Coloring {
  std::vector<VertexSet> cells;
  std::vector<double> masses;
};

bool is_valid_coloring(const Graph& g, const std::vector<VertexSet>& cells);

// Entropy of the cell masses.
double coloring_entropy(const Distribution& p, const std::vector<VertexSet>& cells);

struct ChromaticEntropy {
  Coloring coloring;
  double value_bits = 0.0;
};

// Exact minimum over proper colorings, n <= 18. Among colorings within
// 1e-12 of the optimum the one with fewest cells wins, then the
// lexicographically smallest sorted cell list.
ChromaticEntropy min_entropy_coloring(const Graph& g, const Distribution& p);

struct EntropyBounds {
  double neg_log_alpha_bits = 0.0;  // -log2 max_S P(S) over independent S
  double graph_entropy_bits = 0.0;
  double graph_entropy_gap_bits = 0.0;
  double chromatic_entropy_bits = 0.0;
  double log_chromatic_number_bits = 0.0;
  std::optional<double> uniform_lower_bound_bits;  // log2(n/alpha), uniform P only
};

// Computes the four quantities and checks that they are nondecreasing in the
// order listed (within tol), plus the uniform lower bound when P is uniform.
EntropyBounds chromatic_entropy_bounds(const Graph& g, const Distribution& p, double tol = 1e-9);

// H_chi(G^i, P^(i)) / i for i = 1..depth over OR powers; n^depth <= 36.
std::vector<double> or_product_convergence(const Graph& g, const Distribution& p, int depth, double tol = 1e-9);

}  // namespace symentropy
