#pragma once

#include <vector>

#include "symentropy/distribution.hpp"
#include "symentropy/graph.hpp"

namespace symentropy {

Graph complement(const Graph& g);

// Edge-set union of two graphs on the same vertex set.
Graph union_same_vertices(const Graph& f, const Graph& g);

struct DisjointUnion {
  Graph graph;
  std::vector<int> part_of;  // index of the input part each vertex came from
};

// Parts are laid out consecutively; part i occupies a contiguous label range.
DisjointUnion disjoint_union(const std::vector<Graph>& parts);

struct LineGraph {
  Graph graph;
  std::vector<Edge> root_edge;  // root_edge[x] is the edge of G that vertex x stands for
  VertexMap edge_to_vertex;     // edge index in G.edges() -> vertex of L(G)
};

LineGraph line_graph(const Graph& g);

// OR (co-normal) product. Tuples are numbered in mixed radix with the
// first factor most significant.
Graph or_product(const std::vector<Graph>& factors);
std::vector<Vertex> decode_tuple(const std::vector<Graph>& factors, Vertex index);

// Independent product distribution on the tuples of or_product(factors).
Distribution product_distribution(const std::vector<Distribution>& factors);

struct Substitution {
  Graph graph;
  VertexMap host;      // V(G) \ {v} -> labels in the result
  VertexMap inserted;  // V(F) -> labels in the result
};

// G with v replaced by F: F's vertices take labels 0..|F|-1 and each is
// joined to every former neighbour of v; the rest of G follows in order.
Substitution substitute(const Graph& g, Vertex v, const Graph& f);

// P_{v<-Q}: P off F, P(v)Q(x) on F, laid out like substitute().
Distribution distribution_substitute(const Distribution& p, Vertex v, const Distribution& q);

// Subgraph induced by `keep`, relabelled 0..|keep|-1 in the given order.
Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& keep);

}  // namespace symentropy
