#pragma once

#include <optional>
#include <vector>

#include "symentropy/graph.hpp"

namespace symentropy {

struct Bipartition {
  std::vector<Vertex> a;
  std::vector<Vertex> b;
};

// Two-colouring by BFS; colour 0 (part a) goes to the smallest vertex of
// each component.
std::optional<Bipartition> bipartition(const Graph& g);

// Components as sorted vertex lists, ordered by smallest vertex.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

std::vector<Edge> bridges(const Graph& g);

// The common degree when g is regular (0 for the empty vertex set).
std::optional<int> regular_degree(const Graph& g);
bool is_k_regular(const Graph& g, int k);
std::vector<Vertex> isolated_vertices(const Graph& g);

// N(D) for D inside part a of a bipartite graph.
std::vector<Vertex> neighborhood(const Graph& g, const Bipartition& parts,
                                 const std::vector<Vertex>& d);

struct StructureReport {
  std::optional<Bipartition> parts;
  std::vector<std::vector<Vertex>> components;
  std::vector<Edge> bridges;
  std::optional<int> regular_degree;
};

StructureReport structure_queries(const Graph& g);

// Decided by backtracking automorphism search; n <= 16.
bool is_vertex_transitive(const Graph& g);

// An automorphism sending `from` to `to`, if one exists; n <= 16.
std::optional<std::vector<Vertex>> find_automorphism(const Graph& g, Vertex from, Vertex to);

}  // namespace symentropy
