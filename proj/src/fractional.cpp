#include "symentropy/fractional.hpp"

#include "symentropy/errors.hpp"

namespace symentropy {

namespace {

// Compact (Tucker) tableau for  max c.y  s.t.  A y <= b, y >= 0  with b >= 0,
// so the all-slack basis is feasible and no phase one is needed. Variables
// 0..cols-1 are structural, cols.. are the row slacks.
class RationalSimplex {
 public:
  RationalSimplex(std::vector<std::vector<Rational>> a, std::vector<Rational> b, std::vector<Rational> c)
      : a_(std::move(a)), b_(std::move(b)), reduced_(std::move(c)) {
    rows_ = a_.size();
    cols_ = reduced_.size();
    nonbasic_.resize(cols_);
    basic_.resize(rows_);
    for (std::size_t j = 0; j < cols_; ++j) nonbasic_[j] = static_cast<int>(j);
    for (std::size_t i = 0; i < rows_; ++i) basic_[i] = static_cast<int>(cols_ + i);
  }

  void solve() {
    for (;;) {
      // Bland: lowest-index improving variable enters.
      std::optional<std::size_t> enter;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (reduced_[j] > 0 && (!enter || nonbasic_[j] < nonbasic_[*enter])) enter = j;
      }
      if (!enter) return;
      std::optional<std::size_t> leave;
      Rational best_ratio;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (a_[i][*enter] <= 0) continue;
        Rational ratio = b_[i] / a_[i][*enter];
        if (!leave || ratio < best_ratio || (ratio == best_ratio && basic_[i] < basic_[*leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      ensure(leave.has_value(), "packing LP reported unbounded");
      pivot(*leave, *enter);
    }
  }

  Rational objective() const { return objective_; }

  // Primal values of the structural variables.
  std::vector<Rational> primal() const {
    std::vector<Rational> y(cols_, Rational(0));
    for (std::size_t i = 0; i < rows_; ++i) {
      if (basic_[i] < static_cast<int>(cols_)) y[basic_[i]] = b_[i];
    }
    return y;
  }

  // Dual values (one per row), read off the slack reduced costs.
  std::vector<Rational> dual() const {
    std::vector<Rational> x(rows_, Rational(0));
    for (std::size_t j = 0; j < cols_; ++j) {
      if (nonbasic_[j] >= static_cast<int>(cols_)) x[nonbasic_[j] - cols_] = -reduced_[j];
    }
    return x;
  }

 private:
  void pivot(std::size_t r, std::size_t c) {
    const Rational piv = a_[r][c];
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j != c) a_[r][j] /= piv;
    }
    b_[r] /= piv;
    a_[r][c] = Rational(1) / piv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || a_[i][c] == 0) continue;
      const Rational factor = a_[i][c];
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j != c && a_[r][j] != 0) a_[i][j] -= factor * a_[r][j];
      }
      b_[i] -= factor * b_[r];
      a_[i][c] = -factor * a_[r][c];
    }
    const Rational gain = reduced_[c];
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j != c && a_[r][j] != 0) reduced_[j] -= gain * a_[r][j];
    }
    objective_ += gain * b_[r];
    reduced_[c] = -gain * a_[r][c];
    std::swap(basic_[r], nonbasic_[c]);
  }

  std::vector<std::vector<Rational>> a_;
  std::vector<Rational> b_;
  std::vector<Rational> reduced_;
  Rational objective_ = 0;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<int> basic_;
  std::vector<int> nonbasic_;
};

}  // namespace

bool is_valid_fractional_coloring(const Graph& g, const FractionalColoring& coloring, const Rational& total) {
  std::vector<Rational> cover(g.order(), Rational(0));
  Rational sum = 0;
  for (const auto& [set, weight] : coloring) {
    if (weight < 0 || !is_independent(g, set) || !set.is_subset_of(g.all_vertices())) return false;
    set.for_each([&](Vertex v) { cover[v] += weight; });
    sum += weight;
  }
  for (const Rational& c : cover) {
    if (c < 1) return false;
  }
  return sum == total;
}

FractionalChromatic fractional_chromatic_number(const Graph& g) {
  if (g.order() > kFractionalCap) {
    fail(ErrorCode::kSizeLimitExceeded, "fractional chromatic number is capped at 20 vertices");
  }
  if (g.order() == 0) return FractionalChromatic{Rational(0), {}, {}};
  const std::vector<VertexSet> sets = maximal_independent_sets(g);
  std::vector<std::vector<Rational>> a(sets.size(), std::vector<Rational>(g.order(), Rational(0)));
  for (std::size_t r = 0; r < sets.size(); ++r) sets[r].for_each([&](Vertex v) { a[r][v] = 1; });
  RationalSimplex lp(std::move(a), std::vector<Rational>(sets.size(), Rational(1)),
                     std::vector<Rational>(g.order(), Rational(1)));
  lp.solve();

  FractionalChromatic out;
  out.value = lp.objective();
  out.vertex_weights = lp.primal();
  const std::vector<Rational> set_weights = lp.dual();
  for (std::size_t r = 0; r < sets.size(); ++r) {
    if (set_weights[r] != 0) out.coloring.emplace_back(sets[r], set_weights[r]);
  }
  ensure(is_valid_fractional_coloring(g, out.coloring, out.value), "fractional coloring failed verification");
  Rational dual_total = 0;
  for (const Rational& y : out.vertex_weights) {
    ensure(y >= 0, "negative dual weight");
    dual_total += y;
  }
  ensure(dual_total == out.value, "dual objective differs from primal");
  for (VertexSet s : sets) {
    Rational load = 0;
    s.for_each([&](Vertex v) { load += out.vertex_weights[v]; });
    ensure(load <= 1, "dual weighting overloads an independent set");
  }
  return out;
}

FractionalEdgeChromatic fractional_edge_chromatic_number(const Graph& g1) {
  if (g1.order() > kFractionalCap) {
    fail(ErrorCode::kSizeLimitExceeded, "fractional edge chromatic number is capped at 20 vertices");
  }
  if (g1.size() == 0) fail(ErrorCode::kEmptyEdgeSet, "graph has no edges");
  int best_edges = 0;
  int best_half = 1;
  std::optional<VertexSet> best_u;
  const std::uint64_t limit = std::uint64_t{1} << g1.order();
  for (std::uint64_t bits = 1; bits < limit; ++bits) {
    VertexSet u(bits);
    if (u.size() < 3) continue;
    int inside = edges_inside(g1, u);
    int half = u.size() / 2;
    // compare inside/half against best_edges/best_half
    long long lhs = static_cast<long long>(inside) * best_half;
    long long rhs = static_cast<long long>(best_edges) * half;
    if (!best_u || lhs > rhs || (lhs == rhs && lex_less(u, *best_u))) {
      best_edges = inside;
      best_half = half;
      best_u = u;
    }
  }
  const Rational delta(g1.max_degree());
  if (!best_u || delta >= Rational(BigInt(best_edges), BigInt(best_half))) {
    return FractionalEdgeChromatic{delta, std::nullopt};
  }
  return FractionalEdgeChromatic{Rational(BigInt(best_edges), BigInt(best_half)), best_u};
}

KGraphCheck is_k_graph(const Graph& g1) {
  KGraphCheck out;
  out.k = regular_degree(g1);
  if (!out.k || *out.k == 0) return out;
  out.edge_chromatic = fractional_edge_chromatic_number(g1);
  out.odd_cuts = all_odd_cuts_at_least(g1, *out.k);
  const bool by_formula = out.edge_chromatic->value == *out.k;
  ensure(by_formula == out.odd_cuts->holds, "Edmonds formula and odd-cut criterion disagree");
  out.is_k_graph = by_formula;
  return out;
}

}  // namespace symentropy
