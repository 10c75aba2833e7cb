#include "symentropy/graph.hpp"

#include <algorithm>
#include <set>

#include "symentropy/errors.hpp"

namespace symentropy {

Graph::Graph(int n) : Graph(n, std::vector<Edge>{}) {}

Graph::Graph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges)
    : Graph(n, [&] {
        std::vector<Edge> list;
        for (auto [a, b] : edges) list.emplace_back(a, b);
        return list;
      }()) {}

Graph::Graph(int n, std::vector<Edge> edges, std::vector<std::string> names)
    : n_(n), edges_(std::move(edges)), names_(std::move(names)) {
  if (n < 0) fail(ErrorCode::kDomainError, "negative vertex count");
  if (!names_.empty() && static_cast<int>(names_.size()) != n) {
    fail(ErrorCode::kDimensionMismatch, "name list length differs from vertex count");
  }
  for (const Edge& e : edges_) {
    if (e.u < 0 || e.v >= n) {
      fail(ErrorCode::kUnknownVertex,
           "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} out of range");
    }
    if (e.u == e.v) fail(ErrorCode::kDomainError, "self-loop at " + std::to_string(e.u));
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    fail(ErrorCode::kDomainError, "parallel edge");
  }
  adjacency_.assign(n, {});
  for (const Edge& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
  if (has_masks()) {
    masks_.assign(n, VertexSet{});
    for (const Edge& e : edges_) {
      masks_[e.u].insert(e.v);
      masks_[e.v].insert(e.u);
    }
  }
}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& list : adjacency_) best = std::max(best, static_cast<int>(list.size()));
  return best;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (has_masks()) return masks_[u].contains(v);
  return std::binary_search(adjacency_[u].begin(), adjacency_[u].end(), v);
}

std::string Graph::name_of(Vertex v) const {
  return names_.empty() ? std::to_string(v) : names_[v];
}

bool is_independent(const Graph& g, VertexSet s) {
  bool ok = true;
  s.for_each([&](Vertex v) { ok = ok && !g.neighbor_set(v).intersects(s); });
  return ok;
}

bool is_clique(const Graph& g, VertexSet s) {
  bool ok = true;
  s.for_each([&](Vertex v) {
    VertexSet others = s;
    others.erase(v);
    ok = ok && others.is_subset_of(g.neighbor_set(v));
  });
  return ok;
}

VertexMap::VertexMap(std::vector<Vertex> sources, std::vector<Vertex> targets)
    : sources_(std::move(sources)), targets_(std::move(targets)) {
  if (sources_.size() != targets_.size()) {
    fail(ErrorCode::kDimensionMismatch, "vertex map sides differ in length");
  }
  std::set<Vertex> seen_s(sources_.begin(), sources_.end());
  std::set<Vertex> seen_t(targets_.begin(), targets_.end());
  if (seen_s.size() != sources_.size() || seen_t.size() != targets_.size()) {
    fail(ErrorCode::kInvariantViolation, "vertex map is not injective");
  }
}

std::optional<Vertex> VertexMap::target_of(Vertex source) const {
  auto it = std::find(sources_.begin(), sources_.end(), source);
  if (it == sources_.end()) return std::nullopt;
  return targets_[it - sources_.begin()];
}

std::optional<Vertex> VertexMap::source_of(Vertex target) const {
  auto it = std::find(targets_.begin(), targets_.end(), target);
  if (it == targets_.end()) return std::nullopt;
  return sources_[it - targets_.begin()];
}

}  // namespace symentropy
