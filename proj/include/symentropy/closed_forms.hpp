#pragma once

#include <optional>
#include <vector>

#include "symentropy/distribution.hpp"
#include "symentropy/entropy.hpp"
#include "symentropy/graph.hpp"
#include "symentropy/structure.hpp"

namespace symentropy {

// H(K_n, P) = H(P).
double complete_graph_entropy(const Distribution& p);

// Entropy of a complete multipartite graph: the Shannon entropy of P
// aggregated over the parts. Throws kNotCompleteMultipartite otherwise.
double multipartite_entropy(const Graph& g, const Distribution& p);

struct ComponentEntropy {
  std::vector<Vertex> vertices;
  double mass = 0.0;
  double value_bits = 0.0;  // entropy of the component under the conditional distribution
  double gap_bits = 0.0;
};

struct ComponentsEntropy {
  double value_bits = 0.0;
  double gap_bits = 0.0;  // mass-weighted sum of component gaps
  std::vector<ComponentEntropy> components;
};

// Mass-weighted sum of per-component entropies; zero-mass components
// contribute nothing and are not solved.
ComponentsEntropy components_entropy(const Graph& g, const Distribution& p,
                                     const EntropyOptions& options = {});

enum class KornerMartonCase { kNeighborhoodCondition, kPartition };

struct BipartiteBlock {
  std::vector<Vertex> d;  // inside part A
  std::vector<Vertex> u;  // inside part B
  double contribution_bits = 0.0;
};

struct BipartiteEntropyReport {
  KornerMartonCase case_tag = KornerMartonCase::kNeighborhoodCondition;
  double value_bits = 0.0;
  std::vector<BipartiteBlock> blocks;         // partition case only
  std::vector<Vertex> violating_set;          // some D with P(D)/P(A) > P(N(D))/P(B)
  std::optional<double> solver_value_bits;    // partition case only
};

// Closed-form bipartite entropy with parts taken as given (A first). When
// the neighbourhood condition holds the value is h(P(A)); otherwise the
// block partition is reconstructed and checked against the solver within
// match_tolerance. Requires no isolated vertices, |A|+|B| <= 20, and
// P(A), P(B) > 0; the partition branch additionally needs |A|,|B| <= 8
// when the direct reconstruction does not match.
BipartiteEntropyReport korner_marton_entropy(const Graph& g, const Bipartition& parts, const Distribution& p,
                                             double match_tolerance = 1e-6);

// Tries (A,B) and then (B,A); returns the first orientation in which the
// neighbourhood condition holds.
std::optional<BipartiteEntropyReport> korner_marton_condition_either_side(const Graph& g, const Bipartition& parts,
                                                                          const Distribution& p);

}  // namespace symentropy
