#include "symentropy/structure.hpp"

#include <algorithm>
#include <functional>
#include <queue>

#include "symentropy/errors.hpp"

namespace symentropy {

std::optional<Bipartition> bipartition(const Graph& g) {
  std::vector<int> colour(g.order(), -1);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (colour[s] >= 0) continue;
    colour[s] = 0;
    std::queue<Vertex> queue;
    queue.push(s);
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop();
      for (Vertex w : g.neighbors(u)) {
        if (colour[w] < 0) {
          colour[w] = 1 - colour[u];
          queue.push(w);
        } else if (colour[w] == colour[u]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition parts;
  for (Vertex v = 0; v < g.order(); ++v) (colour[v] == 0 ? parts.a : parts.b).push_back(v);
  return parts;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<int> seen(g.order(), 0);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (Vertex w : g.neighbors(comp[i])) {
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<Edge> bridges(const Graph& g) {
  const int n = g.order();
  std::vector<int> disc(n, -1);
  std::vector<int> low(n, 0);
  std::vector<Edge> out;
  int timer = 0;
  std::function<void(Vertex, Vertex)> dfs = [&](Vertex u, Vertex parent) {
    disc[u] = low[u] = timer++;
    for (Vertex w : g.neighbors(u)) {
      if (w == parent) continue;  // simple graph: a single parent edge
      if (disc[w] < 0) {
        dfs(w, u);
        low[u] = std::min(low[u], low[w]);
        if (low[w] > disc[u]) out.emplace_back(u, w);
      } else {
        low[u] = std::min(low[u], disc[w]);
      }
    }
  };
  for (Vertex s = 0; s < n; ++s) {
    if (disc[s] < 0) dfs(s, -1);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<int> regular_degree(const Graph& g) {
  if (g.order() == 0) return 0;
  int k = g.degree(0);
  for (Vertex v = 1; v < g.order(); ++v) {
    if (g.degree(v) != k) return std::nullopt;
  }
  return k;
}

bool is_k_regular(const Graph& g, int k) {
  auto d = regular_degree(g);
  return d && *d == k;
}

std::vector<Vertex> isolated_vertices(const Graph& g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 0) out.push_back(v);
  }
  return out;
}

std::vector<Vertex> neighborhood(const Graph& g, const Bipartition& parts,
                                 const std::vector<Vertex>& d) {
  std::vector<int> side(g.order(), -1);
  for (Vertex v : parts.a) side[v] = 0;
  for (Vertex v : parts.b) side[v] = 1;
  for (const Edge& e : g.edges()) {
    if (side[e.u] < 0 || side[e.u] == side[e.v]) {
      fail(ErrorCode::kNotBipartite, "parts do not form a bipartition");
    }
  }
  std::vector<char> hit(g.order(), 0);
  for (Vertex v : d) {
    if (!g.has_vertex(v) || side[v] != 0) {
      fail(ErrorCode::kNotBipartite, "queried set is not inside part A");
    }
    for (Vertex w : g.neighbors(v)) hit[w] = 1;
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (hit[v]) out.push_back(v);
  }
  return out;
}

StructureReport structure_queries(const Graph& g) {
  return StructureReport{bipartition(g), connected_components(g), bridges(g), regular_degree(g)};
}

namespace {

constexpr int kAutomorphismCap = 16;

// Assigns images vertex by vertex (BFS order from `from`) keeping adjacency
// and non-adjacency to every earlier vertex consistent.
class AutomorphismSearch {
 public:
  explicit AutomorphismSearch(const Graph& g) : g_(g), image_(g.order(), -1), used_(g.order(), 0) {}

  std::optional<std::vector<Vertex>> run(Vertex from, Vertex to) {
    order_.clear();
    std::vector<char> queued(g_.order(), 0);
    auto bfs_from = [&](Vertex root) {
      std::size_t head = order_.size();
      order_.push_back(root);
      queued[root] = 1;
      for (; head < order_.size(); ++head) {
        for (Vertex w : g_.neighbors(order_[head])) {
          if (!queued[w]) {
            queued[w] = 1;
            order_.push_back(w);
          }
        }
      }
    };
    bfs_from(from);
    for (Vertex v = 0; v < g_.order(); ++v) {
      if (!queued[v]) bfs_from(v);
    }
    if (g_.degree(from) != g_.degree(to)) return std::nullopt;
    image_[from] = to;
    used_[to] = 1;
    bool found = extend(1);
    if (!found) {
      image_.assign(g_.order(), -1);
      used_.assign(g_.order(), 0);
      return std::nullopt;
    }
    std::vector<Vertex> out = image_;
    image_.assign(g_.order(), -1);
    used_.assign(g_.order(), 0);
    return out;
  }

 private:
  bool consistent(std::size_t depth, Vertex candidate) const {
    Vertex v = order_[depth];
    if (g_.degree(v) != g_.degree(candidate)) return false;
    for (std::size_t i = 0; i < depth; ++i) {
      Vertex u = order_[i];
      if (g_.adjacent(u, v) != g_.adjacent(image_[u], candidate)) return false;
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    Vertex v = order_[depth];
    for (Vertex c = 0; c < g_.order(); ++c) {
      if (used_[c] || !consistent(depth, c)) continue;
      image_[v] = c;
      used_[c] = 1;
      if (extend(depth + 1)) return true;
      used_[c] = 0;
      image_[v] = -1;
    }
    return false;
  }

  const Graph& g_;
  std::vector<Vertex> order_;
  std::vector<Vertex> image_;
  std::vector<char> used_;
};

}  // namespace

std::optional<std::vector<Vertex>> find_automorphism(const Graph& g, Vertex from, Vertex to) {
  if (g.order() > kAutomorphismCap) {
    fail(ErrorCode::kSizeLimitExceeded, "automorphism search is capped at 16 vertices");
  }
  if (!g.has_vertex(from) || !g.has_vertex(to)) fail(ErrorCode::kUnknownVertex, "vertex out of range");
  return AutomorphismSearch(g).run(from, to);
}

bool is_vertex_transitive(const Graph& g) {
  if (g.order() > kAutomorphismCap) {
    fail(ErrorCode::kSizeLimitExceeded, "vertex transitivity is capped at 16 vertices");
  }
  if (g.order() <= 1) return true;
  if (!regular_degree(g)) return false;
  // Grow the orbit of 0 under the automorphisms found so far; only vertices
  // outside the current orbit need a fresh search.
  std::vector<char> in_orbit(g.order(), 0);
  in_orbit[0] = 1;
  std::vector<std::vector<Vertex>> generators;
  AutomorphismSearch search(g);
  for (Vertex target = 1; target < g.order(); ++target) {
    if (in_orbit[target]) continue;
    auto sigma = search.run(0, target);
    if (!sigma) return false;
    generators.push_back(*sigma);
    bool grew = true;
    while (grew) {
      grew = false;
      for (Vertex v = 0; v < g.order(); ++v) {
        if (!in_orbit[v]) continue;
        for (const auto& gen : generators) {
          if (!in_orbit[gen[v]]) {
            in_orbit[gen[v]] = 1;
            grew = true;
          }
        }
      }
    }
  }
  return true;
}

}  // namespace symentropy
