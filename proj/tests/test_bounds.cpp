#include <gtest/gtest.h>

#include "support/fixtures.hpp"
#include "wic/bounds.hpp"
#include "wic/errors.hpp"
#include "wic/exact.hpp"
#include "wic/generators.hpp"

namespace wic {
namespace {

TEST(LowerBound, Examples) {
  EXPECT_EQ(lower_bound_chromatic(underlying_graph(fixtures::prism())), 2);
  const UndirectedWeightedGraph c5 = fixtures::undirected(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}});
  EXPECT_EQ(lower_bound_chromatic(c5), 3);
  EXPECT_EQ(lower_bound_chromatic(fixtures::undirected(2, {{1, 2}}, Rational(1, 2))), 1);
  EXPECT_EQ(lower_bound_chromatic(fixtures::undirected(2, {{1, 2}}, Rational(0))), 1);
}

TEST(UpperDegreeWeight, Examples) {
  EXPECT_EQ(upper_bound_degree_weight(fixtures::prism()), 4);
  EXPECT_EQ(upper_bound_degree_weight(fixtures::complete(3, Rational(1, 2))), 2);
  const UndirectedWeightedGraph star =
      fixtures::undirected(5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}}, Rational(1, 4));
  EXPECT_EQ(upper_bound_degree_weight(embed_undirected(star)), 2);
  EXPECT_EQ(upper_bound_degree_weight(WeightedDigraph(3, {})), 1);
}

TEST(UpperSumWeights, Examples) {
  EXPECT_EQ(upper_bound_sum_weights(fixtures::fig1()), 7);
  EXPECT_EQ(upper_bound_sum_weights(WeightedDigraph(3, {})), 1);
  EXPECT_EQ(upper_bound_sum_weights(WeightedDigraph(2, {{1, 2, Weight(1, 1)}, {2, 1, Weight(1, 1)}})), 5);
}

TEST(UpperIndegree, Examples) {
  EXPECT_EQ(upper_bound_indegree(fixtures::fig1()), 3);
  EXPECT_EQ(upper_bound_indegree(WeightedDigraph(3, {})), 1);
  EXPECT_EQ(upper_bound_indegree(WeightedDigraph(2, {{1, 2, Weight(1, 1)}})), 3);
}

TEST(BoundReport, KeyValueText) {
  const std::string text = compute_bounds(fixtures::fig1()).to_string();
  EXPECT_NE(text.find("upper_indegree=3\n"), std::string::npos);
  EXPECT_NE(text.find("upper_sum_weights=7\n"), std::string::npos);
  EXPECT_EQ(text.find("treewidth_cap"), std::string::npos);
  const BoundReport arcless = compute_bounds(WeightedDigraph(4, {}));
  EXPECT_EQ(arcless.lower_chromatic, 1);
  EXPECT_EQ(arcless.best_upper(), 1);
}

TEST(GreedyRecolor, Examples) {
  const WeightedDigraph prism = fixtures::prism();
  const RecolorResult r = greedy_recolor(prism, 4);
  EXPECT_TRUE(is_valid_coloring(prism, r.coloring));
  EXPECT_EQ(monochromatic_edges(underlying_graph(prism), r.coloring), 0);
  EXPECT_LE(r.coloring.max_color(), 4);
  EXPECT_THROW(greedy_recolor(prism, 3), PreconditionError);

  const WeightedDigraph k3 = fixtures::complete(3, Rational(1));
  const RecolorResult proper = greedy_recolor(k3, 3);
  EXPECT_EQ(proper.coloring.distinct_colors(), 3);

  const RecolorResult trivial = greedy_recolor(WeightedDigraph(3, {}), 1);
  EXPECT_EQ(trivial.coloring.max_color(), 1);
  EXPECT_EQ(trivial.steps, 0);
}

TEST(GreedyRecolor, RandomInstancesValidWithinEdgeCount) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const WeightedDigraph g = random_instance(12, 0.3, UniformRational{6}, seed);
    const int k = upper_bound_degree_weight(g);
    const RecolorResult r = greedy_recolor(g, k);
    EXPECT_TRUE(is_valid_coloring(g, r.coloring));
    EXPECT_LE(r.steps, static_cast<int>(underlying_graph(g).edge_count()));
  }
}

TEST(SubcubicTwoColoring, Examples) {
  const UndirectedWeightedGraph light = parse_undirected(read_file(fixtures::data_path("prism_light.wug")));
  const RecolorResult r = subcubic_two_coloring(light);
  EXPECT_TRUE(is_valid_coloring(embed_undirected(light), r.coloring));
  EXPECT_LE(r.coloring.max_color(), 2);
  EXPECT_EQ(exact_chi_w(embed_undirected(light)).chromatic, 2);

  const UndirectedWeightedGraph c4 = fixtures::undirected(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}, Rational(1, 2));
  EXPECT_TRUE(is_valid_coloring(embed_undirected(c4), subcubic_two_coloring(c4).coloring));

  const UndirectedWeightedGraph heavy = parse_undirected(read_file(fixtures::data_path("prism.wug")));
  try {
    subcubic_two_coloring(heavy);
    FAIL() << "expected WeightOne";
  } catch (const PreconditionError& e) {
    EXPECT_EQ(std::string(e.what()).rfind("WeightOne", 0), 0u);
  }
  const UndirectedWeightedGraph star =
      fixtures::undirected(5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}}, Rational(1, 2));
  EXPECT_THROW(subcubic_two_coloring(star), PreconditionError);
}

TEST(SubcubicTwoColoring, AtMostOneSameColoredNeighbor) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const UndirectedWeightedGraph h = random_subcubic(14, 0.4, 0.0, 8, seed);
    const RecolorResult r = subcubic_two_coloring(h);
    EXPECT_LE(r.steps, static_cast<int>(h.edge_count()));
    for (Vertex v = 1; v <= h.vertex_count(); ++v) {
      int same = 0;
      for (const Incidence& inc : h.neighbors(v)) same += r.coloring[inc.other] == r.coloring[v];
      EXPECT_LE(same, 1);
    }
  }
}

}  // namespace
}  // namespace wic
