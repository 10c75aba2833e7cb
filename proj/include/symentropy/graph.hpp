#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "symentropy/vertex_set.hpp"

namespace symentropy {

// Undirected edge stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  auto operator<=>(const Edge&) const = default;
};

// Immutable undirected simple graph on vertices 0..n-1. Names are
// metadata only; every algorithm works on the dense labels.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::vector<Edge> edges, std::vector<std::string> names = {});
  Graph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges);

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }

  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
  int max_degree() const;
  bool adjacent(Vertex u, Vertex v) const;
  bool has_vertex(Vertex v) const { return v >= 0 && v < n_; }

  // Bitmask adjacency; only available when order() <= 64.
  bool has_masks() const { return n_ <= VertexSet::kCapacity; }
  VertexSet neighbor_set(Vertex v) const { return masks_[v]; }
  VertexSet all_vertices() const { return VertexSet::full(n_); }

  const std::vector<std::string>& names() const { return names_; }
  std::string name_of(Vertex v) const;

  bool operator==(const Graph& other) const { return n_ == other.n_ && edges_ == other.edges_; }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<VertexSet> masks_;
  std::vector<std::string> names_;
};

// True when no edge of g joins two members of s.
bool is_independent(const Graph& g, VertexSet s);
bool is_clique(const Graph& g, VertexSet s);

// Total bijection between a declared domain and image, used to report how
// vertices of inputs land in constructed graphs.
class VertexMap {
 public:
  VertexMap() = default;
  VertexMap(std::vector<Vertex> sources, std::vector<Vertex> targets);

  std::size_t size() const { return sources_.size(); }
  const std::vector<Vertex>& sources() const { return sources_; }
  const std::vector<Vertex>& targets() const { return targets_; }
  std::optional<Vertex> target_of(Vertex source) const;
  std::optional<Vertex> source_of(Vertex target) const;

 private:
  std::vector<Vertex> sources_;
  std::vector<Vertex> targets_;
};

}  // namespace symentropy
