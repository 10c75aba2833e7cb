#include "symentropy/combinatorics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "symentropy/constructions.hpp"
#include "symentropy/errors.hpp"

namespace symentropy {

namespace {

void require_at_most(const Graph& g, int cap, const char* what) {
  if (g.order() > cap) {
    fail(ErrorCode::kSizeLimitExceeded,
         std::string(what) + " is capped at " + std::to_string(cap) + " vertices");
  }
}

// Bron-Kerbosch with pivoting on the non-adjacency relation.
void enumerate_maximal(const std::vector<VertexSet>& compatible, VertexSet r, VertexSet p,
                       VertexSet x, std::vector<VertexSet>& out) {
  if (p.empty() && x.empty()) {
    out.push_back(r);
    return;
  }
  Vertex pivot = -1;
  int best = -1;
  (p | x).for_each([&](Vertex u) {
    int c = (p & compatible[u]).size();
    if (c > best) {
      best = c;
      pivot = u;
    }
  });
  VertexSet branch = p - compatible[pivot];
  branch.for_each([&](Vertex v) {
    VertexSet rv = r;
    rv.insert(v);
    enumerate_maximal(compatible, rv, p & compatible[v], x & compatible[v], out);
    p.erase(v);
    x.insert(v);
  });
}

template <class W>
struct Tolerance;

template <>
struct Tolerance<double> {
  static bool greater(double a, double b) { return a > b + 1e-12 * std::max(1.0, std::abs(b)); }
  static bool tied(double a, double b) { return !greater(a, b) && !greater(b, a); }
};

template <>
struct Tolerance<Rational> {
  static bool greater(const Rational& a, const Rational& b) { return a > b; }
  static bool tied(const Rational& a, const Rational& b) { return a == b; }
};

template <class W>
class MwisSearch {
 public:
  MwisSearch(const Graph& g, std::span<const W> weights) : g_(g), w_(weights) {}

  WeightedSet<W> run() {
    best_ = WeightedSet<W>{VertexSet{}, W(0)};
    search(VertexSet{}, W(0), g_.all_vertices());
    return best_;
  }

 private:
  // Greedy partition of the candidates into cliques; each clique holds at
  // most one member of an independent set.
  W bound(VertexSet candidates) const {
    W total(0);
    while (!candidates.empty()) {
      Vertex v = candidates.first();
      VertexSet clique_cands = candidates & g_.neighbor_set(v);
      candidates.erase(v);
      W heaviest = w_[v];
      while (!clique_cands.empty()) {
        Vertex u = clique_cands.first();
        clique_cands &= g_.neighbor_set(u);
        candidates.erase(u);
        if (w_[u] > heaviest) heaviest = w_[u];
      }
      total += heaviest;
    }
    return total;
  }

  void offer(VertexSet s, const W& weight) {
    if (Tolerance<W>::greater(weight, best_.weight) ||
        (Tolerance<W>::tied(weight, best_.weight) && lex_less(s, best_.set))) {
      best_ = WeightedSet<W>{s, weight};
    }
  }

  void search(VertexSet current, W weight, VertexSet candidates) {
    if (candidates.empty()) {
      offer(current, weight);
      return;
    }
    if (Tolerance<W>::greater(best_.weight, weight + bound(candidates))) return;
    Vertex v = candidates.first();
    VertexSet with = current;
    with.insert(v);
    search(with, weight + w_[v], candidates - g_.neighbor_set(v) - VertexSet{v});
    VertexSet rest = candidates;
    rest.erase(v);
    search(current, weight, rest);
  }

  const Graph& g_;
  std::span<const W> w_;
  WeightedSet<W> best_;
};

template <class W>
WeightedSet<W> mwis_impl(const Graph& g, std::span<const W> weights) {
  require_at_most(g, VertexSet::kCapacity, "independent-set search");
  if (static_cast<int>(weights.size()) != g.order()) {
    fail(ErrorCode::kDimensionMismatch, "weight vector length differs from vertex count");
  }
  for (const W& w : weights) {
    if (w < 0) fail(ErrorCode::kNegativeEntry, "independent-set weights must be nonnegative");
  }
  auto result = MwisSearch<W>(g, weights).run();
  ensure(is_independent(g, result.set), "oracle returned a dependent set");
  return result;
}

}  // namespace

std::vector<VertexSet> maximal_independent_sets(const Graph& g) {
  require_at_most(g, kEnumerationCap, "maximal independent set enumeration");
  std::vector<VertexSet> compatible(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    compatible[v] = g.all_vertices() - g.neighbor_set(v) - VertexSet{v};
  }
  std::vector<VertexSet> out;
  if (g.order() == 0) return {VertexSet{}};
  enumerate_maximal(compatible, VertexSet{}, g.all_vertices(), VertexSet{}, out);
  std::sort(out.begin(), out.end(), LexLess{});
  for (VertexSet s : out) ensure(is_independent(g, s), "enumerated set is not independent");
  return out;
}

WeightedSet<double> max_weight_independent_set(const Graph& g, std::span<const double> weights) {
  return mwis_impl<double>(g, weights);
}

WeightedSet<Rational> max_weight_independent_set(const Graph& g, std::span<const Rational> weights) {
  return mwis_impl<Rational>(g, weights);
}

int independence_number(const Graph& g) {
  std::vector<double> ones(g.order(), 1.0);
  return static_cast<int>(std::lround(max_weight_independent_set(g, ones).weight));
}

MaximumCliques maximum_cliques(const Graph& g) {
  require_at_most(g, kEnumerationCap, "maximum clique listing");
  Graph co = complement(g);
  MaximumCliques out;
  out.omega = independence_number(co);
  for (VertexSet s : maximal_independent_sets(co)) {
    if (s.size() == out.omega) out.cliques.push_back(s);
  }
  for (VertexSet k : out.cliques) ensure(is_clique(g, k), "listed set is not a clique");
  ensure(!out.cliques.empty() || g.order() == 0, "no maximum clique found");
  return out;
}

std::vector<Edge> maximum_matching_bipartite(const Graph& g, const Bipartition& parts) {
  // validates the bipartition
  neighborhood(g, parts, {});
  std::vector<Vertex> mate(g.order(), -1);
  std::vector<int> visited(g.order(), -1);
  int stamp = 0;
  auto augment = [&](auto&& self, Vertex a) -> bool {
    for (Vertex b : g.neighbors(a)) {
      if (visited[b] == stamp) continue;
      visited[b] = stamp;
      if (mate[b] < 0 || self(self, mate[b])) {
        mate[b] = a;
        mate[a] = b;
        return true;
      }
    }
    return false;
  };
  for (Vertex a : parts.a) {
    ++stamp;
    augment(augment, a);
  }
  std::vector<Edge> matching;
  for (Vertex a : parts.a) {
    if (mate[a] >= 0) matching.emplace_back(a, mate[a]);
  }
  std::sort(matching.begin(), matching.end());
  return matching;
}

bool is_valid_clique_cover(const Graph& g, const CliqueCover& cover, int omega) {
  VertexSet seen;
  for (VertexSet part : cover) {
    if (part.size() != omega || part.intersects(seen) || !is_clique(g, part)) return false;
    seen |= part;
  }
  return seen == g.all_vertices();
}

std::optional<CliqueCover> clique_cover_by_max_cliques(const Graph& g) {
  require_at_most(g, kEnumerationCap, "clique cover search");
  if (g.order() == 0) return CliqueCover{};
  MaximumCliques mc = maximum_cliques(g);
  if (g.order() % mc.omega != 0) return std::nullopt;
  std::vector<std::vector<VertexSet>> through(g.order());
  for (VertexSet k : mc.cliques) k.for_each([&](Vertex v) { through[v].push_back(k); });
  CliqueCover chosen;
  auto cover = [&](auto&& self, VertexSet uncovered) -> bool {
    if (uncovered.empty()) return true;
    Vertex v = uncovered.first();
    for (VertexSet k : through[v]) {
      if (!k.is_subset_of(uncovered)) continue;
      chosen.push_back(k);
      if (self(self, uncovered - k)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (!cover(cover, g.all_vertices())) return std::nullopt;
  ensure(is_valid_clique_cover(g, chosen, mc.omega), "clique cover failed validation");
  return chosen;
}

int cut_size(const Graph& g, VertexSet u) {
  int total = 0;
  u.for_each([&](Vertex v) { total += (g.neighbor_set(v) - u).size(); });
  return total;
}

int edges_inside(const Graph& g, VertexSet u) {
  int twice = 0;
  u.for_each([&](Vertex v) { twice += (g.neighbor_set(v) & u).size(); });
  return twice / 2;
}

OddCutScan all_odd_cuts_at_least(const Graph& g, int k) {
  require_at_most(g, kOddCutCap, "odd-cut scan");
  OddCutScan out;
  const std::uint64_t limit = std::uint64_t{1} << g.order();
  for (std::uint64_t bits = 1; bits < limit; ++bits) {
    VertexSet u(bits);
    if (u.size() % 2 == 0) continue;
    int cut = cut_size(g, u);
    if (cut >= k) continue;
    if (out.holds || cut < out.witness_cut || (cut == out.witness_cut && lex_less(u, *out.witness))) {
      out.holds = false;
      out.witness = u;
      out.witness_cut = cut;
    }
  }
  return out;
}

int chromatic_number(const Graph& g) {
  require_at_most(g, kEnumerationCap, "chromatic number search");
  const int n = g.order();
  if (n == 0) return 0;
  if (g.size() == 0) return 1;
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  std::vector<int> colour(n, -1);
  auto colourable = [&](int k) {
    auto place = [&](auto&& self, int idx, int used) -> bool {
      if (idx == n) return true;
      Vertex v = order[idx];
      for (int c = 0; c < std::min(used + 1, k); ++c) {
        bool clash = false;
        for (Vertex w : g.neighbors(v)) {
          if (colour[w] == c) {
            clash = true;
            break;
          }
        }
        if (clash) continue;
        colour[v] = c;
        if (self(self, idx + 1, std::max(used, c + 1))) return true;
        colour[v] = -1;
      }
      return false;
    };
    std::fill(colour.begin(), colour.end(), -1);
    return place(place, 0, 0);
  };
  int k = 1;
  while (!colourable(k)) ++k;
  return k;
}

}  // namespace symentropy
