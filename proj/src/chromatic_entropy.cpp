#include "symentropy/chromatic_entropy.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "symentropy/combinatorics.hpp"
#include "symentropy/constructions.hpp"
#include "symentropy/entropy.hpp"
#include "symentropy/errors.hpp"

namespace symentropy {

namespace {

constexpr double kTieTolerance = 1e-12;
constexpr int kProductCap = 36;

double plogp_inv(double mass, double bound) { return mass > 0.0 ? mass * std::log2(1.0 / bound) : 0.0; }

bool cells_less(const std::vector<VertexSet>& a, const std::vector<VertexSet>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), lex_less);
}

// Depth-first over assignments in nonincreasing-p order. The bound charges
// every vertex p_v log(1/u_v), u_v being an upper bound on the final mass of
// the cell that will hold v.
class ColoringSearch {
 public:
  ColoringSearch(const Graph& g, const Distribution& p) : p_(p.weights().begin(), p.weights().end()) {
    const int n = g.order();
    order_.resize(n);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](Vertex a, Vertex b) { return p_[a] > p_[b]; });
    for (Vertex v = 0; v < n; ++v) nbr_.push_back(g.neighbor_set(v));
    unassigned_ = VertexSet::full(n);
  }

  ChromaticEntropy run() {
    descend(0);
    ChromaticEntropy out;
    out.coloring.cells = best_cells_;
    for (VertexSet c : best_cells_) out.coloring.masses.push_back(mass(c));
    out.value_bits = best_value_;
    return out;
  }

 private:
  double mass(VertexSet s) const {
    double total = 0.0;
    s.for_each([&](Vertex v) { total += p_[v]; });
    return total;
  }

  double lower_bound() const {
    double bound = 0.0;
    std::vector<double> cap(cells_.size());
    std::vector<VertexSet> open(cells_.size());
    for (std::size_t j = 0; j < cells_.size(); ++j) {
      open[j] = unassigned_ - blocked_[j];
      cap[j] = std::min(1.0, masses_[j] + mass(open[j]));
      bound += plogp_inv(masses_[j], cap[j]);
    }
    unassigned_.for_each([&](Vertex v) {
      double u = p_[v] + mass(unassigned_ - nbr_[v] - VertexSet{v});
      for (std::size_t j = 0; j < cells_.size(); ++j) {
        if (open[j].contains(v)) u = std::max(u, cap[j]);
      }
      bound += plogp_inv(p_[v], std::min(1.0, u));
    });
    return bound;
  }

  void leaf() {
    double value = 0.0;
    for (double m : masses_) value += plogp_inv(m, m);
    value = std::max(0.0, value);
    std::vector<VertexSet> sorted = cells_;
    std::sort(sorted.begin(), sorted.end(), lex_less);
    bool take = best_cells_.empty() || value < best_value_ - kTieTolerance;
    if (!take && std::abs(value - best_value_) <= kTieTolerance) {
      take = sorted.size() < best_cells_.size() ||
             (sorted.size() == best_cells_.size() && cells_less(sorted, best_cells_));
    }
    if (take) {
      best_value_ = value;
      best_cells_ = std::move(sorted);
    }
  }

  void descend(std::size_t index) {
    if (index == order_.size()) {
      leaf();
      return;
    }
    if (!best_cells_.empty() && lower_bound() > best_value_ + kTieTolerance) return;
    const Vertex v = order_[index];
    unassigned_.erase(v);
    for (std::size_t j = 0; j < cells_.size(); ++j) {
      if (blocked_[j].contains(v)) continue;
      const VertexSet saved_blocked = blocked_[j];
      cells_[j].insert(v);
      blocked_[j] |= nbr_[v];
      masses_[j] += p_[v];
      descend(index + 1);
      masses_[j] -= p_[v];
      blocked_[j] = saved_blocked;
      cells_[j].erase(v);
    }
    cells_.push_back(VertexSet{v});
    blocked_.push_back(nbr_[v]);
    masses_.push_back(p_[v]);
    descend(index + 1);
    masses_.pop_back();
    blocked_.pop_back();
    cells_.pop_back();
    unassigned_.insert(v);
  }

  std::vector<double> p_;
  std::vector<Vertex> order_;
  std::vector<VertexSet> nbr_;
  VertexSet unassigned_;
  std::vector<VertexSet> cells_;
  std::vector<VertexSet> blocked_;
  std::vector<double> masses_;
  std::vector<VertexSet> best_cells_;
  double best_value_ = 0.0;
};

ChromaticEntropy solve(const Graph& g, const Distribution& p, int cap) {
  if (p.size() != g.order()) fail(ErrorCode::kDimensionMismatch, "distribution length differs from vertex count");
  if (g.order() > cap) {
    fail(ErrorCode::kSizeLimitExceeded, "minimum-entropy coloring is capped at " + std::to_string(cap) + " vertices");
  }
  if (g.order() == 0) fail(ErrorCode::kEmptyInput, "graph has no vertices");
  ChromaticEntropy out = ColoringSearch(g, p).run();
  ensure(is_valid_coloring(g, out.coloring.cells), "coloring has a non-independent cell");
  ensure(std::abs(coloring_entropy(p, out.coloring.cells) - out.value_bits) <= 1e-12,
         "coloring entropy does not match the reported optimum");
  return out;
}

}  // namespace

bool is_valid_coloring(const Graph& g, const std::vector<VertexSet>& cells) {
  VertexSet seen;
  for (VertexSet c : cells) {
    if (c.empty() || c.intersects(seen) || !is_independent(g, c)) return false;
    seen |= c;
  }
  return seen == VertexSet::full(g.order());
}

double coloring_entropy(const Distribution& p, const std::vector<VertexSet>& cells) {
  std::vector<double> masses;
  for (VertexSet c : cells) masses.push_back(p.mass(c));
  return shannon_entropy(masses);
}

ChromaticEntropy min_entropy_coloring(const Graph& g, const Distribution& p) { return solve(g, p, kColoringCap); }

EntropyBounds chromatic_entropy_bounds(const Graph& g, const Distribution& p, double tol) {
  EntropyBounds out;
  const WeightedSet<double> heaviest = max_weight_independent_set(g, p.weights());
  out.neg_log_alpha_bits = -std::log2(heaviest.weight);
  EntropyOptions options;
  options.tol_bits = tol;
  const EntropyResult h = graph_entropy(g, p, options);
  out.graph_entropy_bits = h.value_bits;
  out.graph_entropy_gap_bits = h.gap_bits;
  out.chromatic_entropy_bits = min_entropy_coloring(g, p).value_bits;
  out.log_chromatic_number_bits = std::log2(static_cast<double>(chromatic_number(g)));

  ensure(out.neg_log_alpha_bits <= out.graph_entropy_bits + tol, "-log alpha(G,P) exceeds H(G,P)");
  ensure(out.graph_entropy_bits - out.graph_entropy_gap_bits <= out.chromatic_entropy_bits + tol,
         "H(G,P) exceeds the chromatic entropy");
  ensure(out.chromatic_entropy_bits <= out.log_chromatic_number_bits + tol, "chromatic entropy exceeds log chi");
  if (p.exact() && p.exact_weights() == Distribution::uniform(g.order()).exact_weights()) {
    out.uniform_lower_bound_bits = std::log2(static_cast<double>(g.order()) / independence_number(g));
    ensure(*out.uniform_lower_bound_bits <= out.chromatic_entropy_bits + tol,
           "chromatic entropy below log(n/alpha) under the uniform distribution");
  }
  return out;
}

std::vector<double> or_product_convergence(const Graph& g, const Distribution& p, int depth, double tol) {
  if (depth < 1) fail(ErrorCode::kDomainError, "depth must be positive");
  double vertices = 1.0;
  for (int i = 0; i < depth; ++i) vertices *= g.order();
  if (vertices > kProductCap) fail(ErrorCode::kSizeLimitExceeded, "OR power exceeds 36 vertices");

  EntropyOptions options;
  options.tol_bits = tol;
  const EntropyResult h = graph_entropy(g, p, options);
  std::vector<double> levels;
  std::vector<Graph> factors;
  std::vector<Distribution> marginals;
  for (int i = 1; i <= depth; ++i) {
    factors.push_back(g);
    marginals.push_back(p);
    const double level = solve(or_product(factors), product_distribution(marginals), kProductCap).value_bits / i;
    ensure(level >= h.value_bits - h.gap_bits - tol, "normalised chromatic entropy fell below H(G,P)");
    ensure(levels.empty() || level <= levels.back() + tol, "normalised chromatic entropy increased with depth");
    levels.push_back(level);
  }
  return levels;
}

}  // namespace symentropy
