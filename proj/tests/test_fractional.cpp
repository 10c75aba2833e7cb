#include <gtest/gtest.h>

#include "support/oracles.hpp"
#include "symentropy/builtins.hpp"
#include "symentropy/combinatorics.hpp"
#include "symentropy/constructions.hpp"
#include "symentropy/errors.hpp"
#include "symentropy/fractional.hpp"
#include "symentropy/structure.hpp"

using namespace symentropy;

TEST(FractionalChromatic, Examples) {
  auto c5 = fractional_chromatic_number(builtins::cycle(5));
  EXPECT_EQ(c5.value, make_rational(5, 2));
  EXPECT_TRUE(is_valid_fractional_coloring(builtins::cycle(5), c5.coloring, c5.value));
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(fractional_chromatic_number(builtins::complete(n)).value, make_rational(n));
  EXPECT_EQ(fractional_chromatic_number(builtins::path(5)).value, make_rational(2));
  EXPECT_EQ(fractional_chromatic_number(builtins::empty(3)).value, make_rational(1));
  EXPECT_THROW(fractional_chromatic_number(builtins::empty(21)), Error);
}

TEST(FractionalChromatic, CertificateChecks) {
  const Graph c5 = builtins::cycle(5);
  FractionalColoring half{{VertexSet{0, 2}, make_rational(1, 2)}};
  EXPECT_FALSE(is_valid_fractional_coloring(c5, half, make_rational(1, 2)));
  FractionalColoring not_independent{{VertexSet{0, 1, 2, 3, 4}, make_rational(1)}};
  EXPECT_FALSE(is_valid_fractional_coloring(c5, not_independent, make_rational(1)));
}

TEST(FractionalChromatic, DualityAndBounds) {
  std::mt19937_64 rng(401);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = oracle::random_graph(8, 0.45, rng);
    auto f = fractional_chromatic_number(g);
    EXPECT_TRUE(is_valid_fractional_coloring(g, f.coloring, f.value));
    Rational dual = 0;
    for (const Rational& y : f.vertex_weights) dual += y;
    EXPECT_EQ(dual, f.value);
    EXPECT_GE(f.value, make_rational(g.order(), independence_number(g)));
    EXPECT_LE(f.value, make_rational(oracle::chromatic_number(g)));
    EXPECT_GE(f.value, make_rational(oracle::clique_number(g)));
  }
}

TEST(FractionalChromatic, VertexTransitiveEqualsNOverAlpha) {
  for (const char* name : {"c5", "c7", "c8", "petersen", "k3_3", "fig2", "k2_2_2"}) {
    const Graph g = builtins::by_name(name);
    ASSERT_TRUE(is_vertex_transitive(g));
    EXPECT_EQ(fractional_chromatic_number(g).value, make_rational(g.order(), independence_number(g))) << name;
  }
}

TEST(FractionalEdgeChromatic, Examples) {
  auto pet = fractional_edge_chromatic_number(builtins::petersen());
  EXPECT_EQ(pet.value, make_rational(3));
  auto fig3 = fractional_edge_chromatic_number(builtins::bridged_cubic());
  EXPECT_EQ(fig3.value, make_rational(7, 2));
  ASSERT_TRUE(fig3.witness);
  EXPECT_EQ(*fig3.witness, (VertexSet{0, 1, 2, 3, 4}));
  EXPECT_EQ(edges_inside(builtins::bridged_cubic(), *fig3.witness), 7);
  auto k4 = fractional_edge_chromatic_number(builtins::complete(4));
  EXPECT_EQ(k4.value, make_rational(3));
  EXPECT_FALSE(k4.witness);  // degree attains it
  EXPECT_EQ(fractional_edge_chromatic_number(builtins::cycle(5)).value, make_rational(5, 2));
}

TEST(FractionalEdgeChromatic, EqualsVertexLpOnLineGraph) {
  std::mt19937_64 rng(403);
  for (const char* name : {"petersen", "fig2", "fig3", "k4", "c5", "k3_3", "star4"}) {
    const Graph g = builtins::by_name(name);
    EXPECT_EQ(fractional_edge_chromatic_number(g).value, fractional_chromatic_number(line_graph(g).graph).value)
        << name;
  }
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = oracle::random_graph(7, 0.45, rng);
    if (g.size() == 0 || g.size() > 20) continue;
    EXPECT_EQ(fractional_edge_chromatic_number(g).value, fractional_chromatic_number(line_graph(g).graph).value);
  }
}

TEST(FractionalEdgeChromatic, BelowIntegerEdgeChromatic) {
  // Petersen is a snark: chi' = 4 while chi'_f = 3.
  const Graph pet = builtins::petersen();
  const int chi_prime = chromatic_number(line_graph(pet).graph);
  EXPECT_EQ(chi_prime, 4);
  EXPECT_LE(fractional_edge_chromatic_number(pet).value, make_rational(chi_prime));
  std::mt19937_64 rng(405);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = oracle::random_graph(6, 0.5, rng);
    if (g.size() == 0) continue;
    EXPECT_LE(fractional_edge_chromatic_number(g).value, make_rational(chromatic_number(line_graph(g).graph)));
  }
}

TEST(KGraph, Examples) {
  auto pet = is_k_graph(builtins::petersen());
  EXPECT_TRUE(pet.is_k_graph);
  EXPECT_EQ(pet.k, 3);
  auto fig3 = is_k_graph(builtins::bridged_cubic());
  EXPECT_FALSE(fig3.is_k_graph);
  ASSERT_TRUE(fig3.odd_cuts && fig3.odd_cuts->witness);
  EXPECT_EQ(fig3.odd_cuts->witness_cut, 1);
  // C5: U = V is odd with no leaving edge, and chi'_f = 5/2 > 2
  auto c5 = is_k_graph(builtins::cycle(5));
  EXPECT_FALSE(c5.is_k_graph);
  EXPECT_EQ(c5.k, 2);
  ASSERT_TRUE(c5.odd_cuts && c5.odd_cuts->witness);
  EXPECT_EQ(*c5.odd_cuts->witness, VertexSet::full(5));
  EXPECT_EQ(c5.odd_cuts->witness_cut, 0);
  EXPECT_TRUE(is_k_graph(builtins::cycle(6)).is_k_graph);
  EXPECT_FALSE(is_k_graph(builtins::path(3)).is_k_graph);
}

TEST(KGraph, RoutesAgreeOnRegularGraphs) {
  std::vector<Graph> regular{builtins::petersen(), builtins::prism(), builtins::bridged_cubic(),
                             builtins::complete(4), builtins::complete(5), builtins::cycle(7),
                             builtins::by_name("k3_3"), builtins::by_name("k2_2_2"),
                             line_graph(builtins::complete(4)).graph, builtins::c4_c6()};
  std::mt19937_64 rng(407);
  for (int trial = 0; trial < 200 && regular.size() < 30; ++trial) {
    Graph g = oracle::random_graph(8, 0.5, rng);
    if (regular_degree(g) && g.size() > 0) regular.push_back(g);
  }
  for (const Graph& g : regular) {
    auto check = is_k_graph(g);  // asserts internally that both routes agree
    const int k = *regular_degree(g);
    EXPECT_EQ(check.is_k_graph, fractional_edge_chromatic_number(g).value == make_rational(k));
    EXPECT_EQ(check.is_k_graph, oracle::min_odd_cut(g) >= k);
  }
}
