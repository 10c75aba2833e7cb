#include "symentropy/constructions.hpp"

#include <numeric>

#include "symentropy/errors.hpp"

namespace symentropy {

Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (!g.adjacent(u, v)) edges.emplace_back(u, v);
    }
  }
  return Graph(g.order(), std::move(edges), g.names());
}

Graph union_same_vertices(const Graph& f, const Graph& g) {
  if (f.order() != g.order() || (!f.names().empty() && !g.names().empty() && f.names() != g.names())) {
    fail(ErrorCode::kVertexSetMismatch, "union of graphs on different vertex sets");
  }
  std::vector<Edge> edges = f.edges();
  for (const Edge& e : g.edges()) {
    if (!f.adjacent(e.u, e.v)) edges.push_back(e);
  }
  return Graph(f.order(), std::move(edges), f.names().empty() ? g.names() : f.names());
}

DisjointUnion disjoint_union(const std::vector<Graph>& parts) {
  if (parts.empty()) fail(ErrorCode::kEmptyInput, "disjoint union of no graphs");
  DisjointUnion out;
  std::vector<Edge> edges;
  int offset = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (const Edge& e : parts[i].edges()) edges.emplace_back(e.u + offset, e.v + offset);
    out.part_of.insert(out.part_of.end(), parts[i].order(), static_cast<int>(i));
    offset += parts[i].order();
  }
  out.graph = Graph(offset, std::move(edges));
  return out;
}

LineGraph line_graph(const Graph& g) {
  if (g.size() == 0) fail(ErrorCode::kEmptyEdgeSet, "line graph of a graph without edges");
  const auto& root = g.edges();
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < root.size(); ++i) {
    for (std::size_t j = i + 1; j < root.size(); ++j) {
      const Edge& a = root[i];
      const Edge& b = root[j];
      if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) {
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
  }
  std::vector<std::string> names;
  for (const Edge& e : root) names.push_back(g.name_of(e.u) + "-" + g.name_of(e.v));
  std::vector<Vertex> ids(root.size());
  std::iota(ids.begin(), ids.end(), 0);
  return LineGraph{Graph(static_cast<int>(root.size()), std::move(edges), std::move(names)), root,
                   VertexMap(ids, ids)};
}

std::vector<Vertex> decode_tuple(const std::vector<Graph>& factors, Vertex index) {
  std::vector<Vertex> tuple(factors.size());
  for (std::size_t i = factors.size(); i-- > 0;) {
    tuple[i] = index % factors[i].order();
    index /= factors[i].order();
  }
  return tuple;
}

Graph or_product(const std::vector<Graph>& factors) {
  if (factors.empty()) fail(ErrorCode::kEmptyInput, "OR product of no graphs");
  long long total = 1;
  for (const Graph& f : factors) {
    total *= f.order();
    if (total > (1 << 16)) fail(ErrorCode::kSizeLimitExceeded, "OR product too large");
  }
  const int n = static_cast<int>(total);
  std::vector<std::vector<Vertex>> tuples(n);
  for (Vertex x = 0; x < n; ++x) tuples[x] = decode_tuple(factors, x);
  std::vector<Edge> edges;
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y) {
      for (std::size_t i = 0; i < factors.size(); ++i) {
        if (tuples[x][i] != tuples[y][i] && factors[i].adjacent(tuples[x][i], tuples[y][i])) {
          edges.emplace_back(x, y);
          break;
        }
      }
    }
  }
  return Graph(n, std::move(edges));
}

Distribution product_distribution(const std::vector<Distribution>& factors) {
  if (factors.empty()) fail(ErrorCode::kEmptyInput, "product of no distributions");
  bool exact = true;
  for (const auto& d : factors) exact = exact && d.exact();
  if (exact) {
    std::vector<Rational> acc{Rational(1)};
    for (const auto& d : factors) {
      std::vector<Rational> next;
      for (const Rational& a : acc) {
        for (const Rational& b : d.exact_weights()) next.push_back(a * b);
      }
      acc = std::move(next);
    }
    return Distribution::from_rationals(std::move(acc));
  }
  std::vector<double> acc{1.0};
  for (const auto& d : factors) {
    std::vector<double> next;
    for (double a : acc) {
      for (double b : d.weights()) next.push_back(a * b);
    }
    acc = std::move(next);
  }
  return Distribution::from_doubles(std::move(acc), 1e-9);
}

Substitution substitute(const Graph& g, Vertex v, const Graph& f) {
  if (!g.has_vertex(v)) fail(ErrorCode::kUnknownVertex, "vertex " + std::to_string(v) + " not in G");
  const int k = f.order();
  std::vector<Vertex> host_src;
  std::vector<Vertex> host_dst;
  std::vector<Vertex> relabel(g.order(), -1);
  for (Vertex x = 0; x < g.order(); ++x) {
    if (x == v) continue;
    relabel[x] = k + static_cast<Vertex>(host_src.size());
    host_src.push_back(x);
    host_dst.push_back(relabel[x]);
  }
  std::vector<Edge> edges = f.edges();
  for (const Edge& e : g.edges()) {
    if (e.u != v && e.v != v) edges.emplace_back(relabel[e.u], relabel[e.v]);
  }
  for (Vertex w : g.neighbors(v)) {
    for (Vertex x = 0; x < k; ++x) edges.emplace_back(x, relabel[w]);
  }
  std::vector<Vertex> ids(k);
  std::iota(ids.begin(), ids.end(), 0);
  return Substitution{Graph(k + g.order() - 1, std::move(edges)),
                      VertexMap(std::move(host_src), std::move(host_dst)), VertexMap(ids, ids)};
}

Distribution distribution_substitute(const Distribution& p, Vertex v, const Distribution& q) {
  if (v < 0 || v >= p.size()) fail(ErrorCode::kUnknownVertex, "vertex " + std::to_string(v) + " not in G");
  if (p.exact() && q.exact()) {
    std::vector<Rational> out;
    for (const Rational& w : q.exact_weights()) out.push_back(p.exact_weights()[v] * w);
    for (int x = 0; x < p.size(); ++x) {
      if (x != v) out.push_back(p.exact_weights()[x]);
    }
    return Distribution::from_rationals(std::move(out));
  }
  std::vector<double> out;
  for (double w : q.weights()) out.push_back(p[v] * w);
  for (int x = 0; x < p.size(); ++x) {
    if (x != v) out.push_back(p[x]);
  }
  return Distribution::from_doubles(std::move(out), 1e-9);
}

Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& keep) {
  std::vector<Vertex> relabel(g.order(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) relabel[keep[i]] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  std::vector<std::string> names;
  for (const Edge& e : g.edges()) {
    if (relabel[e.u] >= 0 && relabel[e.v] >= 0) edges.emplace_back(relabel[e.u], relabel[e.v]);
  }
  if (!g.names().empty()) {
    for (Vertex v : keep) names.push_back(g.names()[v]);
  }
  return Graph(static_cast<int>(keep.size()), std::move(edges), std::move(names));
}

}  // namespace symentropy
