#include "symentropy/certification.hpp"

#include <cmath>

#include "symentropy/constructions.hpp"
#include "symentropy/fractional.hpp"
#include "symentropy/structure.hpp"

namespace symentropy {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kSymmetric: return "symmetric";
    case Verdict::kNotSymmetric: return "not-symmetric";
    case Verdict::kUndecided: return "undecided-by-theorems";
  }
  return "?";
}

std::string_view to_string(Route r) {
  switch (r) {
    case Route::kPerfectCover: return "perfect+cover";
    case Route::kBipartiteMatching: return "bipartite-matching";
    case Route::kVertexTransitive: return "vertex-transitive";
    case Route::kKGraphLine: return "k-graph-line";
    case Route::kNumeric: return "numeric";
    case Route::kNone: return "none";
  }
  return "?";
}

namespace {

// Induced cycles are grown from their smallest vertex s; `blocked` holds s,
// everything below s, and the closed neighbourhoods of interior vertices.
bool grow_odd_hole(const Graph& g, std::vector<Vertex>& path, VertexSet blocked) {
  const Vertex s = path.front();
  const Vertex last = path.back();
  const VertexSet next_blocked =
      path.size() <= 2 ? blocked : blocked | g.neighbor_set(path[path.size() - 2]) | VertexSet{path[path.size() - 2]};
  const VertexSet candidates = g.neighbor_set(last) - next_blocked - VertexSet{s};
  bool found = false;
  candidates.for_each([&](Vertex x) {
    if (found) return;
    if (path.size() >= 2 && g.adjacent(x, s)) {
      if (path.size() + 1 >= 5 && (path.size() + 1) % 2 == 1) {
        path.push_back(x);
        found = true;
      }
      return;
    }
    path.push_back(x);
    if (grow_odd_hole(g, path, next_blocked)) {
      found = true;
      return;
    }
    path.pop_back();
  });
  return found;
}

std::optional<std::vector<Vertex>> find_odd_hole(const Graph& g) {
  for (Vertex s = 0; s < g.order(); ++s) {
    std::vector<Vertex> path{s};
    VertexSet below(s == 0 ? 0 : (std::uint64_t{1} << s) - 1);
    if (grow_odd_hole(g, path, below | VertexSet{s})) return path;
  }
  return std::nullopt;
}

Counterexample x_bar_counterexample(const Graph& g, VertexSet s, int omega) {
  const int n = g.order();
  ensure(omega >= 2, "counterexample needs an edge");
  ensure(static_cast<long>(s.size()) * omega > n, "independent set is not larger than n/omega");
  Counterexample c;
  c.independent_set = s;
  const double t = static_cast<double>(s.size()) / n;
  c.point.assign(n, (1.0 - t) / (omega - 1));
  s.for_each([&](Vertex v) { c.point[v] = t; });
  c.bound_bits = entropy_upper_bound_from_clique_feasible_point(g, Distribution::uniform(n), c.point);
  c.log_omega_bits = std::log2(static_cast<double>(omega));
  ensure(c.bound_bits < c.log_omega_bits, "x_bar bound does not fall below log2 omega");
  return c;
}

void require_vertices(const Graph& g) {
  if (g.order() == 0) fail(ErrorCode::kEmptyInput, "graph has no vertices");
}

}  // namespace

PerfectTest is_perfect(const Graph& g) {
  if (g.order() > kPerfectCap) fail(ErrorCode::kSizeLimitExceeded, "perfection test is capped at 14 vertices");
  PerfectTest out;
  if (auto hole = find_odd_hole(g)) {
    out.perfect = false;
    out.witness = std::move(*hole);
  } else if (auto antihole = find_odd_hole(complement(g))) {
    out.perfect = false;
    out.witness = std::move(*antihole);
    out.in_complement = true;
  }
  return out;
}

SymmetryVerdict certify_symmetric_perfect(const Graph& g) {
  require_vertices(g);
  if (!is_perfect(g).perfect) fail(ErrorCode::kNotPerfect, "graph has an odd hole or antihole");
  SymmetryVerdict out;
  out.route = Route::kPerfectCover;
  if (auto cover = clique_cover_by_max_cliques(g)) {
    out.verdict = Verdict::kSymmetric;
    out.certificate = std::move(*cover);
    return out;
  }
  const std::vector<double> ones(g.order(), 1.0);
  const VertexSet s = max_weight_independent_set(g, ones).set;
  out.verdict = Verdict::kNotSymmetric;
  out.counterexample = x_bar_counterexample(g, s, maximum_cliques(g).omega);
  return out;
}

SymmetryVerdict certify_symmetric_bipartite(const Graph& g, const Bipartition& parts) {
  require_vertices(g);
  neighborhood(g, parts, {});
  if (!isolated_vertices(g).empty()) fail(ErrorCode::kIsolatedVertex, "graph has an isolated vertex");
  const std::vector<Edge> matching = maximum_matching_bipartite(g, parts);
  SymmetryVerdict out;
  out.route = Route::kBipartiteMatching;
  if (2 * static_cast<int>(matching.size()) == g.order()) {
    out.verdict = Verdict::kSymmetric;
    out.certificate = matching;
    return out;
  }

  // Alternating reachability from the unmatched vertices of one side gives
  // D with N(D) strictly smaller (Konig).
  const int n = g.order();
  std::vector<Vertex> mate(n, -1);
  for (const Edge& e : matching) {
    mate[e.u] = e.v;
    mate[e.v] = e.u;
  }
  const VertexSet side_a = VertexSet::from_members(parts.a);
  const VertexSet side_b = VertexSet::from_members(parts.b);
  auto unmatched_in = [&](VertexSet side) {
    VertexSet free;
    side.for_each([&](Vertex v) {
      if (mate[v] < 0) free.insert(v);
    });
    return free;
  };
  const bool from_a = unmatched_in(side_a).size() >= unmatched_in(side_b).size();
  const VertexSet own = from_a ? side_a : side_b;
  const VertexSet other = from_a ? side_b : side_a;
  VertexSet d = unmatched_in(own);
  VertexSet hood;
  std::vector<Vertex> frontier = d.members();
  while (!frontier.empty()) {
    std::vector<Vertex> next;
    for (Vertex v : frontier) {
      (g.neighbor_set(v) - hood).for_each([&](Vertex w) {
        hood.insert(w);
        ensure(mate[w] >= 0, "augmenting path left after maximum matching");
        if (!d.contains(mate[w])) {
          d.insert(mate[w]);
          next.push_back(mate[w]);
        }
      });
    }
    frontier = std::move(next);
  }
  ensure(hood.size() < d.size(), "Hall violation not found");
  out.verdict = Verdict::kNotSymmetric;
  out.counterexample = x_bar_counterexample(g, d | (other - hood), 2);
  out.counterexample->hall_set = d;
  return out;
}

SymmetryVerdict certify_symmetric_line_of_kgraph(const Graph& g1, double tol) {
  require_vertices(g1);
  const KGraphCheck check = is_k_graph(g1);
  if (!check.is_k_graph) {
    std::optional<VertexSet> witness;
    int cut = 0;
    if (check.odd_cuts && check.odd_cuts->witness) {
      witness = check.odd_cuts->witness;
      cut = check.odd_cuts->witness_cut;
    }
    std::string message = "not a k-graph";
    if (!check.k) {
      message += " (not regular)";
    } else if (witness) {
      message += ": odd set " + witness->to_string() + " has cut " + std::to_string(cut) + " < " + std::to_string(*check.k);
    }
    throw NotKGraphError(std::string(to_string(ErrorCode::kNotKGraph)) + ": " + message, witness, cut);
  }
  const int k = *check.k;
  if (k < 3) fail(ErrorCode::kKBelowThree, "k-graph with k = " + std::to_string(k));

  KktCertificate cert = regular_root_kkt_certificate(g1, k);
  const double residual = kkt_residual_line_graph(g1, Distribution::uniform(g1.size()), cert);
  ensure(residual <= 1e-12, "KKT certificate residual above 1e-12");
  const Graph line = line_graph(g1).graph;
  const EntropyResult h = graph_entropy(line, Distribution::uniform(line.order()));
  ensure(std::abs(h.value_bits - std::log2(static_cast<double>(k))) <= tol + h.gap_bits,
         "line graph entropy differs from log2 k");

  SymmetryVerdict out;
  out.verdict = Verdict::kSymmetric;
  out.route = Route::kKGraphLine;
  out.certificate = std::move(cert);
  return out;
}

SymmetryVerdict certify_symmetric_bridgeless_cubic(const Graph& g1, double tol) {
  require_vertices(g1);
  const StructureReport report = structure_queries(g1);
  if (report.regular_degree != 3) fail(ErrorCode::kNotCubic, "graph is not 3-regular");
  if (!report.bridges.empty()) {
    const Edge e = report.bridges.front();
    throw HasBridgeError(std::string(to_string(ErrorCode::kHasBridge)) + ": bridge {" + g1.name_of(e.u) + "," +
                             g1.name_of(e.v) + "}",
                         e);
  }
  try {
    return certify_symmetric_line_of_kgraph(g1, tol);
  } catch (const NotKGraphError&) {
    fail(ErrorCode::kInvariantViolation, "bridgeless cubic graph failed the odd-cut test");
  }
}

SymmetryVerdict certify_symmetric_vertex_transitive(const Graph& g) {
  require_vertices(g);
  SymmetryVerdict out;
  out.route = Route::kVertexTransitive;
  if (!is_vertex_transitive(g)) {
    out.reason = "automorphism group is not transitive";
    return out;
  }
  const int alpha = independence_number(g);
  out.verdict = Verdict::kSymmetric;
  out.certificate = VertexTransitiveNote{alpha, std::log2(static_cast<double>(g.order()) / alpha)};
  return out;
}

SymmetryVerdict certify_symmetric_numeric(const Graph& g, double tol) {
  require_vertices(g);
  const EntropyResult h = graph_entropy(g, Distribution::uniform(g.order()));
  const FractionalChromatic chi = fractional_chromatic_number(g);
  NumericPair pair{h.value_bits, h.gap_bits, chi.value, std::log2(to_double(chi.value))};
  SymmetryVerdict out;
  out.route = Route::kNumeric;
  out.verdict = std::abs(pair.entropy_bits - pair.log_chi_f_bits) <= tol + pair.gap_bits ? Verdict::kSymmetric
                                                                                          : Verdict::kNotSymmetric;
  out.certificate = std::move(pair);
  return out;
}

SymmetryVerdict certify_symmetric(const Graph& g, bool allow_numeric, double tol) {
  require_vertices(g);
  if (auto parts = bipartition(g); parts && g.size() > 0 && isolated_vertices(g).empty()) {
    return certify_symmetric_bipartite(g, *parts);
  }
  if (g.order() <= kPerfectCap && is_perfect(g).perfect) return certify_symmetric_perfect(g);
  if (g.order() <= 16) {
    SymmetryVerdict vt = certify_symmetric_vertex_transitive(g);
    if (vt.verdict != Verdict::kUndecided) return vt;
  }
  if (allow_numeric) return certify_symmetric_numeric(g, tol);
  SymmetryVerdict out;
  out.reason = g.order() > kPerfectCap ? "too large for the perfection test and not vertex-transitive"
                                       : "not bipartite, not perfect, not vertex-transitive";
  return out;
}

}  // namespace symentropy
