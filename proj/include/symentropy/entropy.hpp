#pragma once

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "symentropy/distribution.hpp"
#include "symentropy/graph.hpp"

namespace symentropy {

// Shannon entropy in bits with 0 log(1/0) = 0.
double shannon_entropy(std::span<const double> p);
double shannon_entropy(const Distribution& p);

// h(x) = -x log x - (1-x) log(1-x), bits. Throws kDomainError outside [0,1].
double binary_entropy(double x);

// A point of the vertex packing polytope kept as a convex combination of
// independent sets, together with its dense coordinates.
struct PolytopePoint {
  std::vector<std::pair<VertexSet, double>> support;
  std::vector<double> coordinates;

  static PolytopePoint from_support(int n, std::vector<std::pair<VertexSet, double>> support);

  // Coefficients nonnegative summing to 1, coordinates consistent with the
  // support, and every support set independent in g.
  bool is_valid_for(const Graph& g) const;
};

struct EntropyResult {
  double value_bits = 0.0;
  double gap_bits = 0.0;  // the optimum lies in [value - gap, value]
  PolytopePoint minimizer;
  long iterations = 0;
  std::vector<double> gap_history;  // filled when requested
};

enum class FrankWolfeVariant { kPlain, kAwayStep };

struct EntropyOptions {
  double tol_bits = 1e-9;
  long max_iterations = 1'000'000;
  FrankWolfeVariant variant = FrankWolfeVariant::kAwayStep;
  bool record_gaps = false;
};

// H(G,P) = min over a in VP(G) of sum_i p_i log2(1/a_i), by Frank-Wolfe
// with the maximum-weight independent set as linear minimisation oracle.
// Stops once the Frank-Wolfe gap is at most tol_bits.
EntropyResult graph_entropy(const Graph& g, const Distribution& p, const EntropyOptions& options = {});

// sum over p_i > 0 of p_i log2(1/a_i); +inf when some such a_i is 0.
double entropy_objective(const Distribution& p, std::span<const double> a);

// Objective at a point certified by its support; an upper bound on H(G,P).
double entropy_upper_bound_from_point(const Graph& g, const Distribution& p, const PolytopePoint& a);

// Objective at a dense point certified through the clique inequalities.
// Only meaningful for perfect graphs, where those inequalities describe
// VP(G); the caller is responsible for having established perfection.
double entropy_upper_bound_from_clique_feasible_point(const Graph& g, const Distribution& p,
                                                      std::span<const double> a);

// Multipliers for minimising -sum_e p_e ln x_e over the matching polytope
// of a root graph. Stationarity is in natural-log units.
struct KktCertificate {
  std::vector<double> x;       // one entry per edge, in G1.edges() order
  std::vector<double> lambda;  // one entry per vertex of G1
  std::map<VertexSet, double, LexLess> gamma;  // odd |U| >= 3; absent means 0
  std::vector<double> stationarity_residual;  // filled by kkt_residual_line_graph
};

// x = 1/k, lambda_v = k/2m, gamma = 0: the certificate for a k-regular root.
KktCertificate regular_root_kkt_certificate(const Graph& g1, int k);

// Max violation over stationarity, complementary slackness, sign
// constraints, and membership of x in the matching polytope (degree and
// odd-set inequalities, n <= 20). Writes per-edge stationarity into cert.
double kkt_residual_line_graph(const Graph& g1, const Distribution& p_edges, KktCertificate& cert);

}  // namespace symentropy
