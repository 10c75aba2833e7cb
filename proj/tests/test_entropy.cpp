#include <gtest/gtest.h>

#include <cmath>

#include "support/oracles.hpp"
#include "symentropy/builtins.hpp"
#include "symentropy/combinatorics.hpp"
#include "symentropy/constructions.hpp"
#include "symentropy/entropy.hpp"
#include "symentropy/errors.hpp"
#include "symentropy/fractional.hpp"

using namespace symentropy;

namespace {

constexpr double kTol = 1e-9;

double H(const Graph& g, const Distribution& p, FrankWolfeVariant variant = FrankWolfeVariant::kAwayStep) {
  EntropyOptions o;
  o.variant = variant;
  return graph_entropy(g, p, o).value_bits;
}

Distribution rationals(std::initializer_list<std::pair<int, int>> fracs) {
  std::vector<Rational> w;
  for (auto [a, b] : fracs) w.push_back(make_rational(a, b));
  return Distribution::from_rationals(w);
}

}  // namespace

TEST(Shannon, Examples) {
  EXPECT_DOUBLE_EQ(shannon_entropy(std::vector<double>{0.5, 0.5}), 1.0);
  EXPECT_DOUBLE_EQ(shannon_entropy(std::vector<double>{1.0, 0.0, 0.0}), 0.0);
  EXPECT_NEAR(shannon_entropy(std::vector<double>{0.4, 0.4, 0.2}), 1.521928, 1e-6);
}

TEST(BinaryEntropy, Examples) {
  EXPECT_DOUBLE_EQ(binary_entropy(0.5), 1.0);
  EXPECT_DOUBLE_EQ(binary_entropy(0.0), 0.0);
  EXPECT_DOUBLE_EQ(binary_entropy(1.0), 0.0);
  EXPECT_NEAR(binary_entropy(0.125), 0.543564, 1e-6);
  EXPECT_NEAR(binary_entropy(0.3), binary_entropy(0.7), 1e-15);
  EXPECT_THROW(binary_entropy(1.5), Error);
  EXPECT_THROW(binary_entropy(-0.1), Error);
}

TEST(GraphEntropy, ReferenceValues) {
  EXPECT_NEAR(H(builtins::c4_c6(), Distribution::uniform(10)), 1.0, kTol);
  EXPECT_NEAR(H(builtins::cycle(4), rationals({{1, 8}, {1, 4}, {3, 8}, {1, 4}})), 1.0, kTol);
  EXPECT_NEAR(H(builtins::cycle(4), Distribution::uniform(4)), 1.0, kTol);
  EXPECT_NEAR(H(builtins::cycle(5), Distribution::uniform(5)), std::log2(2.5), kTol);
  EXPECT_EQ(H(builtins::empty(4), Distribution::from_doubles({0.1, 0.2, 0.3, 0.4})), 0.0);
}

TEST(GraphEntropy, PlainVariantMeetsTheSameContract) {
  for (const char* name : {"c5", "c4c6", "k3_3", "star7", "petersen"}) {
    const Graph g = builtins::by_name(name);
    EntropyOptions o;
    o.variant = FrankWolfeVariant::kPlain;
    o.tol_bits = 1e-5;  // the plain rate is sublinear; tighter targets need millions of steps
    auto plain = graph_entropy(g, Distribution::uniform(g.order()), o);
    auto away = graph_entropy(g, Distribution::uniform(g.order()));
    EXPECT_LE(plain.gap_bits, 1e-5) << name;
    EXPECT_LE(plain.value_bits - plain.gap_bits, away.value_bits + 1e-12) << name;
    EXPECT_LE(away.value_bits - away.gap_bits, plain.value_bits + 1e-12) << name;
  }
}

TEST(GraphEntropy, ErrorPaths) {
  EXPECT_THROW(graph_entropy(builtins::cycle(5), Distribution::uniform(4)), Error);
  EXPECT_THROW(graph_entropy(builtins::empty(25), Distribution::uniform(25)), Error);
  EntropyOptions o;
  o.max_iterations = 2;
  o.tol_bits = 1e-14;
  try {
    graph_entropy(line_graph(builtins::bridged_cubic()).graph, Distribution::uniform(15), o);
    FAIL() << "expected nonconvergence";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNonconvergence);
  }
}

TEST(GraphEntropy, MinimizerReproducesValue) {
  std::mt19937_64 rng(201);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = oracle::random_graph(7, 0.4, rng);
    Distribution p = oracle::random_distribution(7, rng, 0.15);
    auto r = graph_entropy(g, p);
    EXPECT_GE(r.gap_bits, 0.0);
    EXPECT_LE(r.gap_bits, kTol);
    EXPECT_TRUE(r.minimizer.is_valid_for(g));
    EXPECT_NEAR(entropy_objective(p, r.minimizer.coordinates), r.value_bits, 1e-9);
    EXPECT_NEAR(entropy_upper_bound_from_point(g, p, r.minimizer), r.value_bits, 1e-9);
  }
}

TEST(GraphEntropy, BracketContainsGridOptimum) {
  std::mt19937_64 rng(203);
  int checked = 0;
  while (checked < 60) {
    Graph g = oracle::random_graph(6, 0.6, rng);
    if (oracle::maximal_independent_sets(g).size() > 3) continue;
    ++checked;
    Distribution p = oracle::random_distribution(6, rng);
    auto r = graph_entropy(g, p);
    const double grid = oracle::grid_entropy(g, p);
    EXPECT_LE(r.value_bits - r.gap_bits, grid + 1e-9);
    EXPECT_NEAR(r.value_bits, grid, 1e-6);
  }
}

TEST(GraphEntropy, GapDecreasesOverWindows) {
  std::mt19937_64 rng(207);
  for (int trial = 0; trial < 8; ++trial) {
    const Graph g = line_graph(trial == 0 ? builtins::bridged_cubic() : oracle::random_graph(8, 0.5, rng)).graph;
    const Distribution p = trial == 0 ? Distribution::uniform(g.order()) : oracle::random_distribution(g.order(), rng);
    EntropyOptions o;
    o.record_gaps = true;
    const auto gaps = graph_entropy(g, p, o).gap_history;
    double previous = INFINITY;
    for (std::size_t start = 0; start + 50 <= gaps.size(); start += 50) {
      double mean = 0.0;
      for (std::size_t i = start; i < start + 50; ++i) mean += gaps[i];
      mean /= 50;
      EXPECT_LE(mean, previous) << "trial " << trial << " window " << start / 50;
      previous = mean;
    }
  }
}

TEST(UpperBound, Examples) {
  const Graph star = builtins::star(3);
  // x_bar for S = leaves: 3/4 on leaves, 1/4 on the centre
  std::vector<double> x{0.25, 0.75, 0.75, 0.75};
  EXPECT_NEAR(entropy_upper_bound_from_clique_feasible_point(star, Distribution::uniform(4), x), 0.811278, 1e-6);
  EXPECT_NEAR(entropy_upper_bound_from_clique_feasible_point(builtins::empty(3), Distribution::uniform(3),
                                                             std::vector<double>{1.0, 1.0, 1.0}),
              0.0, 1e-15);
  std::vector<double> too_big{0.6, 0.6, 0.6, 0.6};
  try {
    entropy_upper_bound_from_clique_feasible_point(star, Distribution::uniform(4), too_big);
    FAIL() << "expected InfeasiblePoint";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInfeasiblePoint);
  }
  auto bad = PolytopePoint::from_support(4, {{VertexSet{0, 1}, 1.0}});
  EXPECT_THROW(entropy_upper_bound_from_point(star, Distribution::uniform(4), bad), Error);
}

TEST(Kkt, RegularRootCertificates) {
  const Graph k4 = builtins::complete(4);
  auto cert = regular_root_kkt_certificate(k4, 3);
  EXPECT_NEAR(cert.lambda[0], 0.25, 1e-15);
  EXPECT_LE(kkt_residual_line_graph(k4, Distribution::uniform(6), cert), 1e-12);
  const Graph pet = builtins::petersen();
  auto pc = regular_root_kkt_certificate(pet, 3);
  EXPECT_NEAR(pc.lambda[0], 0.1, 1e-15);
  EXPECT_LE(kkt_residual_line_graph(pet, Distribution::uniform(15), pc), 1e-12);
}

TEST(Kkt, DroppingMultipliersLeavesStationarityResidual) {
  const Graph k4 = builtins::complete(4);
  auto cert = regular_root_kkt_certificate(k4, 3);
  std::fill(cert.lambda.begin(), cert.lambda.end(), 0.0);
  EXPECT_NEAR(kkt_residual_line_graph(k4, Distribution::uniform(6), cert), 0.5, 1e-12);
  cert.x.pop_back();
  EXPECT_THROW(kkt_residual_line_graph(k4, Distribution::uniform(6), cert), Error);
}

// Property suites; the acceptance binary runs the larger versions.
TEST(EntropyProperties, MonotoneUnderSpanningSubgraphs) {
  std::mt19937_64 rng(211);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = oracle::random_graph(7, 0.5, rng);
    Graph f = oracle::random_spanning_subgraph(g, 0.6, rng);
    Distribution p = oracle::random_distribution(7, rng);
    EXPECT_LE(H(f, p), H(g, p) + 2 * kTol);
  }
}

TEST(EntropyProperties, SubAdditive) {
  std::mt19937_64 rng(213);
  for (int trial = 0; trial < 100; ++trial) {
    Graph f = oracle::random_graph(7, 0.3, rng);
    Graph g = oracle::random_graph(7, 0.3, rng);
    Distribution p = oracle::random_distribution(7, rng);
    EXPECT_LE(H(union_same_vertices(f, g), p), H(f, p) + H(g, p) + 3 * kTol);
  }
}

TEST(EntropyProperties, SubstitutionIsAdditive) {
  std::mt19937_64 rng(217);
  auto check = [](const Graph& g, const Distribution& p, Vertex v, const Graph& f, const Distribution& q) {
    const double lhs = H(substitute(g, v, f).graph, distribution_substitute(p, v, q));
    EXPECT_NEAR(lhs, H(g, p) + p[v] * H(f, q), 3 * kTol);
  };
  check(builtins::cycle(5), Distribution::uniform(5), 0, builtins::complete(3), Distribution::uniform(3));
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = oracle::random_graph(5, 0.5, rng);
    Graph f = oracle::random_graph(3, 0.5, rng);
    check(g, oracle::random_distribution(5, rng), trial % 5, f, oracle::random_distribution(3, rng));
  }
}

TEST(EntropyProperties, Sandwich) {
  std::mt19937_64 rng(219);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = oracle::random_graph(7, 0.45, rng);
    Distribution p = oracle::random_distribution(7, rng);
    std::vector<double> w(p.weights().begin(), p.weights().end());
    const double value = H(g, p);
    EXPECT_GE(value, -std::log2(oracle::max_independent_weight(g, w)) - kTol);
    EXPECT_LE(value, std::log2(oracle::chromatic_number(g)) + kTol);
    EXPECT_LE(value, std::log2(to_double(fractional_chromatic_number(g).value)) + kTol);
  }
}
