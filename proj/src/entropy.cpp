#include "symentropy/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "symentropy/combinatorics.hpp"
#include "symentropy/constructions.hpp"
#include "symentropy/errors.hpp"

namespace symentropy {

double shannon_entropy(std::span<const double> p) {
  double h = 0.0;
  for (double x : p) {
    if (x > 0.0) h -= x * std::log2(x);
  }
  return h;
}

double shannon_entropy(const Distribution& p) { return shannon_entropy(p.weights()); }

double binary_entropy(double x) {
  if (!(x >= 0.0 && x <= 1.0)) fail(ErrorCode::kDomainError, "binary entropy argument outside [0,1]");
  const double pair[2] = {x, 1.0 - x};
  return shannon_entropy(pair);
}

PolytopePoint PolytopePoint::from_support(int n, std::vector<std::pair<VertexSet, double>> support) {
  PolytopePoint point;
  std::sort(support.begin(), support.end(),
            [](const auto& a, const auto& b) { return lex_less(a.first, b.first); });
  point.support = std::move(support);
  point.coordinates.assign(n, 0.0);
  for (const auto& [set, coef] : point.support) {
    set.for_each([&](Vertex v) { point.coordinates[v] += coef; });
  }
  return point;
}

bool PolytopePoint::is_valid_for(const Graph& g) const {
  if (static_cast<int>(coordinates.size()) != g.order()) return false;
  double total = 0.0;
  std::vector<double> dense(g.order(), 0.0);
  for (const auto& [set, coef] : support) {
    if (coef < 0.0 || !set.is_subset_of(g.all_vertices()) || !is_independent(g, set)) return false;
    total += coef;
    set.for_each([&](Vertex v) { dense[v] += coef; });
  }
  if (std::abs(total - 1.0) > 1e-12) return false;
  for (int i = 0; i < g.order(); ++i) {
    if (std::abs(dense[i] - coordinates[i]) > 1e-12) return false;
  }
  return true;
}

double entropy_objective(const Distribution& p, std::span<const double> a) {
  if (static_cast<int>(a.size()) != p.size()) fail(ErrorCode::kDimensionMismatch, "point and distribution differ in length");
  double value = 0.0;
  for (int i = 0; i < p.size(); ++i) {
    if (p[i] <= 0.0) continue;
    if (a[i] <= 0.0) return std::numeric_limits<double>::infinity();
    value -= p[i] * std::log2(a[i]);
  }
  return value;
}

namespace {

using Atom = std::pair<VertexSet, double>;

std::vector<double> dense_point(int n, const std::vector<Atom>& atoms) {
  std::vector<double> a(n, 0.0);
  for (const auto& [set, coef] : atoms) set.for_each([&](Vertex v) { a[v] += coef; });
  return a;
}

// phi'(t) for phi(t) = -sum p_i ln(a_i + t d_i); +inf once a term leaves
// the domain.
double directional_derivative(std::span<const double> p, std::span<const double> a,
                              std::span<const double> d, double t) {
  double total = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0.0 || d[i] == 0.0) continue;
    double x = a[i] + t * d[i];
    if (x <= 0.0) return std::numeric_limits<double>::infinity();
    total -= p[i] * d[i] / x;
  }
  return total;
}

double second_derivative(std::span<const double> p, std::span<const double> a,
                         std::span<const double> d, double t) {
  double total = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0.0 || d[i] == 0.0) continue;
    double x = a[i] + t * d[i];
    total += p[i] * d[i] * d[i] / (x * x);
  }
  return total;
}

// Exact line search on [0, t_max]: phi is convex, so the step is the root of
// phi' (bisection bracket, Newton steps inside it), or t_max when phi'
// stays negative.
double line_search(std::span<const double> p, std::span<const double> a, std::span<const double> d,
                   double t_max) {
  double end_slope = directional_derivative(p, a, d, t_max);
  if (end_slope <= 0.0) return t_max;
  double lo = 0.0;
  double hi = t_max;
  double t = 0.5 * t_max;
  for (int iter = 0; iter < 200; ++iter) {
    double slope = directional_derivative(p, a, d, t);
    if (slope == 0.0) return t;
    if (slope < 0.0) {
      lo = t;
    } else {
      hi = t;
    }
    if (hi - lo <= 1e-15 * hi || hi - lo <= 1e-300) break;
    double curvature = std::isfinite(slope) ? second_derivative(p, a, d, t) : 0.0;
    double newton = curvature > 0.0 ? t - slope / curvature : -1.0;
    t = (newton > lo && newton < hi) ? newton : 0.5 * (lo + hi);
  }
  return lo;
}

double weight_of(VertexSet s, std::span<const double> g) {
  double total = 0.0;
  s.for_each([&](Vertex v) { total += g[v]; });
  return total;
}

}  // namespace

EntropyResult graph_entropy(const Graph& g, const Distribution& p, const EntropyOptions& options) {
  const int n = g.order();
  if (n == 0) fail(ErrorCode::kEmptyInput, "graph entropy of the empty vertex set");
  if (p.size() != n) fail(ErrorCode::kDimensionMismatch, "distribution length differs from vertex count");
  if (!(options.tol_bits > 0.0)) fail(ErrorCode::kDomainError, "tolerance must be positive");

  std::vector<Atom> atoms;
  {
    auto maximal = maximal_independent_sets(g);
    const double share = 1.0 / static_cast<double>(maximal.size());
    for (VertexSet s : maximal) atoms.emplace_back(s, share);
  }
  const std::span<const double> weights = p.weights();
  std::vector<double> grad(n, 0.0);  // p_i / a_i, the negated gradient in nats
  std::vector<double> direction(n, 0.0);
  EntropyResult result;
  double gap_bits = std::numeric_limits<double>::infinity();
  long iter = 0;
  for (;; ++iter) {
    std::vector<double> a = dense_point(n, atoms);
    double inner = 0.0;
    for (int i = 0; i < n; ++i) {
      grad[i] = weights[i] > 0.0 ? weights[i] / a[i] : 0.0;
      inner += grad[i] * a[i];
    }
    auto toward = max_weight_independent_set(g, grad);
    gap_bits = std::max(0.0, (toward.weight - inner) / std::numbers::ln2);
    if (options.record_gaps) result.gap_history.push_back(gap_bits);
    if (gap_bits <= options.tol_bits) break;
    if (iter >= options.max_iterations) {
      fail(ErrorCode::kNonconvergence,
           "Frank-Wolfe gap " + std::to_string(gap_bits) + " after " + std::to_string(iter) + " iterations");
    }

    std::size_t away = 0;
    double away_gap = -1.0;
    if (options.variant == FrankWolfeVariant::kAwayStep && atoms.size() > 1) {
      double lowest = std::numeric_limits<double>::infinity();
      for (std::size_t j = 0; j < atoms.size(); ++j) {
        double w = weight_of(atoms[j].first, grad);
        if (w < lowest) {
          lowest = w;
          away = j;
        }
      }
      away_gap = (inner - lowest) / std::numbers::ln2;
    }

    if (away_gap > gap_bits) {
      const double lambda = atoms[away].second;
      for (int i = 0; i < n; ++i) direction[i] = a[i] - (atoms[away].first.contains(i) ? 1.0 : 0.0);
      const double t_max = lambda / (1.0 - lambda);
      const double t = line_search(weights, a, direction, t_max);
      for (auto& atom : atoms) atom.second *= (1.0 + t);
      atoms[away].second -= t;
      if (t >= t_max || atoms[away].second <= 0.0) atoms.erase(atoms.begin() + static_cast<long>(away));
    } else {
      for (int i = 0; i < n; ++i) direction[i] = (toward.set.contains(i) ? 1.0 : 0.0) - a[i];
      const double t = line_search(weights, a, direction, 1.0);
      if (t >= 1.0) {
        atoms.assign(1, Atom{toward.set, 1.0});
      } else {
        bool present = false;
        for (auto& atom : atoms) {
          atom.second *= (1.0 - t);
          if (atom.first == toward.set) {
            atom.second += t;
            present = true;
          }
        }
        if (!present && t > 0.0) atoms.emplace_back(toward.set, t);
      }
    }
    // Renormalise against rounding drift and drop vanished atoms.
    std::erase_if(atoms, [](const Atom& atom) { return atom.second <= 0.0; });
    double total = 0.0;
    for (const auto& atom : atoms) total += atom.second;
    for (auto& atom : atoms) atom.second /= total;
  }

  result.minimizer = PolytopePoint::from_support(n, std::move(atoms));
  result.value_bits = entropy_objective(p, result.minimizer.coordinates);
  result.gap_bits = gap_bits;
  result.iterations = iter;
  ensure(result.minimizer.is_valid_for(g), "minimizer failed polytope validation");
  return result;
}

double entropy_upper_bound_from_point(const Graph& g, const Distribution& p, const PolytopePoint& a) {
  if (!a.is_valid_for(g)) fail(ErrorCode::kInfeasiblePoint, "point is not certified inside VP(G)");
  return entropy_objective(p, a.coordinates);
}

double entropy_upper_bound_from_clique_feasible_point(const Graph& g, const Distribution& p,
                                                      std::span<const double> a) {
  if (static_cast<int>(a.size()) != g.order()) fail(ErrorCode::kDimensionMismatch, "point length differs from vertex count");
  for (double x : a) {
    if (x < 0.0) fail(ErrorCode::kInfeasiblePoint, "negative coordinate");
  }
  // Maximal cliques of G are the maximal independent sets of its complement.
  const Graph co = complement(g);
  for (VertexSet clique : maximal_independent_sets(co)) {
    double load = 0.0;
    clique.for_each([&](Vertex v) { load += a[v]; });
    if (load > 1.0 + 1e-12) {
      fail(ErrorCode::kInfeasiblePoint, "clique inequality violated on " + clique.to_string());
    }
  }
  return entropy_objective(p, a);
}

KktCertificate regular_root_kkt_certificate(const Graph& g1, int k) {
  if (k <= 0 || g1.size() == 0) fail(ErrorCode::kDomainError, "certificate needs k >= 1 and edges");
  KktCertificate cert;
  cert.x.assign(g1.size(), 1.0 / k);
  cert.lambda.assign(g1.order(), static_cast<double>(k) / (2.0 * g1.size()));
  return cert;
}

double kkt_residual_line_graph(const Graph& g1, const Distribution& p_edges, KktCertificate& cert) {
  const int m = g1.size();
  const int n = g1.order();
  if (p_edges.size() != m || static_cast<int>(cert.x.size()) != m ||
      static_cast<int>(cert.lambda.size()) != n) {
    fail(ErrorCode::kDimensionMismatch, "certificate dimensions do not match the root graph");
  }
  if (n > kOddCutCap) fail(ErrorCode::kSizeLimitExceeded, "odd-set feasibility scan is capped at 20 vertices");
  for (const auto& [u, gamma] : cert.gamma) {
    if (u.size() < 3 || u.size() % 2 == 0 || !u.is_subset_of(g1.all_vertices())) {
      fail(ErrorCode::kDimensionMismatch, "gamma is indexed by odd sets of size >= 3 only");
    }
  }
  const auto& edges = g1.edges();
  double worst = 0.0;
  cert.stationarity_residual.assign(m, 0.0);
  for (int e = 0; e < m; ++e) {
    if (p_edges[e] > 0.0 && !(cert.x[e] > 0.0)) {
      fail(ErrorCode::kInfeasiblePoint, "x must be positive where p_e > 0");
    }
    double r = (p_edges[e] > 0.0 ? -p_edges[e] / cert.x[e] : 0.0) + cert.lambda[edges[e].u] +
               cert.lambda[edges[e].v];
    for (const auto& [u, gamma] : cert.gamma) {
      if (u.contains(edges[e].u) && u.contains(edges[e].v)) r += gamma;
    }
    cert.stationarity_residual[e] = r;
    worst = std::max(worst, std::abs(r));
    worst = std::max(worst, -cert.x[e]);
  }
  std::vector<double> load(n, 0.0);
  for (int e = 0; e < m; ++e) {
    load[edges[e].u] += cert.x[e];
    load[edges[e].v] += cert.x[e];
  }
  for (int v = 0; v < n; ++v) {
    worst = std::max(worst, -cert.lambda[v]);
    worst = std::max(worst, load[v] - 1.0);
    worst = std::max(worst, std::abs(cert.lambda[v] * (load[v] - 1.0)));
  }
  auto inside = [&](VertexSet u) {
    double total = 0.0;
    for (int e = 0; e < m; ++e) {
      if (u.contains(edges[e].u) && u.contains(edges[e].v)) total += cert.x[e];
    }
    return total;
  };
  for (const auto& [u, gamma] : cert.gamma) {
    worst = std::max(worst, -gamma);
    worst = std::max(worst, std::abs(gamma * (inside(u) - u.size() / 2)));
  }
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t bits = 1; bits < limit; ++bits) {
    VertexSet u(bits);
    if (u.size() < 3 || u.size() % 2 == 0) continue;
    worst = std::max(worst, inside(u) - u.size() / 2);
  }
  return worst;
}

}  // namespace symentropy
