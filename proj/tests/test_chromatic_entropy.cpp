#include <gtest/gtest.h>

#include <cmath>

#include "support/oracles.hpp"
#include "symentropy/builtins.hpp"
#include "symentropy/chromatic_entropy.hpp"
#include "symentropy/combinatorics.hpp"
#include "symentropy/entropy.hpp"
#include "symentropy/errors.hpp"

using namespace symentropy;

namespace {

Distribution star_half() {
  std::vector<Rational> w(8, make_rational(1, 14));
  w[0] = make_rational(1, 2);
  return Distribution::from_rationals(w);
}

}  // namespace

TEST(MinEntropyColoring, ReferenceValues) {
  const Graph c5 = builtins::cycle(5);
  auto u = min_entropy_coloring(c5, Distribution::uniform(5));
  EXPECT_NEAR(u.value_bits, 1.521928, 1e-6);
  std::vector<int> sizes;
  for (VertexSet c : u.coloring.cells) sizes.push_back(c.size());
  std::sort(sizes.begin(), sizes.end());
  EXPECT_EQ(sizes, (std::vector<int>{1, 2, 2}));

  auto p = min_entropy_coloring(c5, Distribution::from_doubles({0.3, 0.2, 0.2, 0.1, 0.2}));
  EXPECT_NEAR(p.value_bits, 1.360964, 1e-6);
  EXPECT_EQ(p.coloring.cells, (std::vector<VertexSet>{VertexSet{0, 2}, VertexSet{1, 4}, VertexSet{3}}));

  EXPECT_NEAR(min_entropy_coloring(builtins::star(7), star_half()).value_bits, 1.0, 1e-12);
  EXPECT_NEAR(min_entropy_coloring(builtins::star(7), Distribution::uniform(8)).value_bits, 0.543564, 1e-6);
}

TEST(MinEntropyColoring, CapAndDimensions) {
  EXPECT_THROW(min_entropy_coloring(builtins::empty(19), Distribution::uniform(19)), Error);
  EXPECT_THROW(min_entropy_coloring(builtins::cycle(5), Distribution::uniform(4)), Error);
  EXPECT_NO_THROW(min_entropy_coloring(builtins::cycle(18), Distribution::uniform(18)));
}

TEST(MinEntropyColoring, ValidityChecks) {
  const Graph c5 = builtins::cycle(5);
  EXPECT_TRUE(is_valid_coloring(c5, {VertexSet{0, 2}, VertexSet{1, 3}, VertexSet{4}}));
  EXPECT_FALSE(is_valid_coloring(c5, {VertexSet{0, 1}, VertexSet{2, 3}, VertexSet{4}}));  // edge inside a cell
  EXPECT_FALSE(is_valid_coloring(c5, {VertexSet{0, 2}, VertexSet{1, 3}}));                // not exhaustive
  EXPECT_FALSE(is_valid_coloring(c5, {VertexSet{0, 2}, VertexSet{2, 4}, VertexSet{1, 3}}));
}

TEST(MinEntropyColoring, MatchesExhaustiveEnumeration) {
  std::mt19937_64 rng(601);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 3 + trial % 6;
    Graph g = oracle::random_graph(n, 0.4, rng);
    Distribution p = trial % 3 == 0 ? Distribution::uniform(n) : oracle::random_distribution(n, rng, 0.1);
    auto fast = min_entropy_coloring(g, p);
    auto slow = oracle::min_entropy_coloring(g, p);
    EXPECT_NEAR(fast.value_bits, slow.value, 1e-12);
    EXPECT_EQ(fast.coloring.cells, slow.cells);
    EXPECT_TRUE(is_valid_coloring(g, fast.coloring.cells));
    EXPECT_NEAR(coloring_entropy(p, fast.coloring.cells), fast.value_bits, 1e-12);
  }
}

TEST(Bounds, Examples) {
  auto c5 = chromatic_entropy_bounds(builtins::cycle(5), Distribution::uniform(5));
  EXPECT_NEAR(c5.neg_log_alpha_bits, std::log2(2.5), 1e-9);
  EXPECT_NEAR(c5.graph_entropy_bits, std::log2(2.5), 1e-9);
  EXPECT_NEAR(c5.chromatic_entropy_bits, 1.521928, 1e-6);
  EXPECT_NEAR(c5.log_chromatic_number_bits, std::log2(3.0), 1e-15);
  ASSERT_TRUE(c5.uniform_lower_bound_bits);

  auto p = Distribution::from_doubles({0.1, 0.2, 0.3, 0.4});
  auto k4 = chromatic_entropy_bounds(builtins::complete(4), p);
  EXPECT_NEAR(k4.graph_entropy_bits, shannon_entropy(p), 1e-9);
  EXPECT_NEAR(k4.chromatic_entropy_bits, shannon_entropy(p), 1e-12);
  EXPECT_LE(k4.chromatic_entropy_bits, 2.0);
  EXPECT_FALSE(k4.uniform_lower_bound_bits);

  auto empty = chromatic_entropy_bounds(builtins::empty(3), Distribution::uniform(3));
  EXPECT_EQ(empty.neg_log_alpha_bits, 0.0);
  EXPECT_EQ(empty.graph_entropy_bits, 0.0);
  EXPECT_EQ(empty.chromatic_entropy_bits, 0.0);
  EXPECT_EQ(empty.log_chromatic_number_bits, 0.0);
}

TEST(Bounds, UniformLowerBoundTightOnC4) {
  auto c4 = chromatic_entropy_bounds(builtins::cycle(4), Distribution::uniform(4));
  EXPECT_NEAR(c4.chromatic_entropy_bits, 1.0, 1e-12);
  EXPECT_NEAR(*c4.uniform_lower_bound_bits, 1.0, 1e-12);
}

TEST(Bounds, ChainHoldsOnRandomGraphs) {
  std::mt19937_64 rng(603);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = oracle::random_graph(7, 0.45, rng);
    const bool uniform = trial % 2 == 0;
    Distribution p = uniform ? Distribution::uniform(7) : oracle::random_distribution(7, rng);
    auto b = chromatic_entropy_bounds(g, p);  // asserts the chain itself
    EXPECT_LE(b.neg_log_alpha_bits, b.graph_entropy_bits + 1e-9);
    EXPECT_LE(b.graph_entropy_bits - b.graph_entropy_gap_bits, b.chromatic_entropy_bits + 1e-9);
    EXPECT_LE(b.chromatic_entropy_bits, b.log_chromatic_number_bits + 1e-9);
    EXPECT_EQ(b.uniform_lower_bound_bits.has_value(), uniform);
    if (uniform) {
      EXPECT_NEAR(*b.uniform_lower_bound_bits, std::log2(7.0 / oracle::max_independent_weight(g, std::vector<double>(7, 1.0))),
                  1e-12);
      EXPECT_LE(*b.uniform_lower_bound_bits, b.chromatic_entropy_bits + 1e-9);
    }
  }
}

TEST(OrProductConvergence, Examples) {
  auto k2 = or_product_convergence(builtins::complete(2), Distribution::uniform(2), 2);
  ASSERT_EQ(k2.size(), 2U);
  EXPECT_NEAR(k2[0], 1.0, 1e-12);
  EXPECT_NEAR(k2[1], 1.0, 1e-12);

  auto empty = or_product_convergence(builtins::empty(3), Distribution::uniform(3), 3);
  for (double level : empty) EXPECT_NEAR(level, 0.0, 1e-12);

  const Graph p4 = builtins::path(4);
  auto levels = or_product_convergence(p4, Distribution::uniform(4), 2);
  const double h = graph_entropy(p4, Distribution::uniform(4)).value_bits;
  EXPECT_LE(levels[1], levels[0] + 1e-12);
  for (double level : levels) EXPECT_GE(level, h - 1e-9);

  auto skewed = or_product_convergence(p4, Distribution::from_doubles({0.4, 0.1, 0.2, 0.3}), 2);
  EXPECT_LE(skewed[1], skewed[0] + 1e-12);
}

TEST(OrProductConvergence, Caps) {
  EXPECT_THROW(or_product_convergence(builtins::cycle(5), Distribution::uniform(5), 3), Error);
  EXPECT_THROW(or_product_convergence(builtins::complete(2), Distribution::uniform(2), 0), Error);
}
