#include <gtest/gtest.h>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "wic/errors.hpp"
#include "wic/exact.hpp"
#include "wic/generators.hpp"

namespace wic {
namespace {

TEST(ExactChiW, Examples) {
  EXPECT_EQ(exact_chi_w(fixtures::prism()).chromatic, 3);
  EXPECT_EQ(exact_chi_w(fixtures::complete(3, Rational(1, 2))).chromatic, 2);
  EXPECT_EQ(exact_chi_w(WeightedDigraph(5, {})).chromatic, 1);
  EXPECT_EQ(exact_chi_w(WeightedDigraph(0, {})).chromatic, 0);
  EXPECT_EQ(exact_chi_w(fixtures::fig1()).chromatic, 2);
}

TEST(ExactChiW, WitnessUsesExactlyTheReportedColors) {
  const SolveResult r = exact_chi_w(fixtures::prism());
  EXPECT_TRUE(is_valid_coloring(fixtures::prism(), r.witness));
  EXPECT_EQ(r.witness.max_color(), 3);
  EXPECT_EQ(r.witness.distinct_colors(), 3);
}

TEST(ExactChiW, LimitAndGuard) {
  EXPECT_FALSE(exact_chi_w(fixtures::prism(), 2).has_value());
  EXPECT_EQ(exact_chi_w(fixtures::prism(), 3)->chromatic, 3);
  EXPECT_THROW(exact_chi_w(WeightedDigraph(17, {})), LimitExceeded);
  EXPECT_EQ(exact_chi_w(WeightedDigraph(17, {}), ExactOptions{20}).chromatic, 1);
}

TEST(ExactChiW, MatchesEnumerationOracle) {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const int n = 1 + static_cast<int>(seed % 7);
    const WeightedDigraph g = random_instance(n, 0.6, UniformRational{5}, seed);
    const SolveResult r = exact_chi_w(g);
    EXPECT_EQ(r.chromatic, oracle::chi_w(g)) << "seed " << seed;
    EXPECT_TRUE(oracle::valid(g, oracle::colors_of(r.witness)));
  }
}

TEST(ExactChiW, MonotoneUnderAddedArcsAndHeavierWeights) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const WeightedDigraph g = random_instance(7, 0.35, Dyadic{2}, seed);
    const int base = exact_chi_w(g).chromatic;
    std::vector<Arc> heavier(g.arcs().begin(), g.arcs().end());
    for (Arc& a : heavier) a.weight = Weight(std::min(Rational(1), a.weight.value() + Rational(1, 4)));
    EXPECT_GE(exact_chi_w(WeightedDigraph(7, heavier)).chromatic, base);
    std::vector<Arc> more(g.arcs().begin(), g.arcs().end());
    for (Vertex v = 2; v <= 7; ++v) {
      if (!g.has_arc(1, v)) {
        more.push_back({1, v, Weight(1, 2)});
        break;
      }
    }
    EXPECT_GE(exact_chi_w(WeightedDigraph(7, more)).chromatic, base);
  }
}

TEST(Defective, Examples) {
  const UndirectedWeightedGraph k3 = fixtures::undirected(3, {{1, 2}, {1, 3}, {2, 3}});
  std::vector<int> ones(3, 1);
  EXPECT_TRUE(is_defective_coloring(k3, Coloring::from_colors(ones), 2));
  EXPECT_FALSE(is_defective_coloring(k3, Coloring::from_colors(ones), 1));
  std::vector<int> proper{1, 2, 3};
  EXPECT_TRUE(is_defective_coloring(k3, Coloring::from_colors(proper), 0));
  EXPECT_THROW(is_defective_coloring(k3, Coloring(3), 0), PreconditionError);

  const UndirectedWeightedGraph k4 = fixtures::undirected(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
  EXPECT_EQ(exact_defective_number(k4, 1, 4)->chromatic, 2);
  EXPECT_EQ(exact_defective_number(k4, 3, 4)->chromatic, 1);
  const UndirectedWeightedGraph c5 = fixtures::undirected(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}});
  EXPECT_EQ(exact_defective_number(c5, 0, 5)->chromatic, 3);
  EXPECT_EQ(exact_defective_number(c5, 2, 5)->chromatic, 1);
}

TEST(ChromaticUnderlying, Examples) {
  EXPECT_EQ(exact_chromatic_underlying(underlying_graph(fixtures::prism())), 3);
  EXPECT_EQ(exact_chromatic_underlying(UndirectedWeightedGraph(4, {})), 1);
  const UndirectedWeightedGraph k4 = fixtures::undirected(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
  EXPECT_EQ(exact_chromatic_underlying(k4), 4);
  // Zero-weight edges are dropped first.
  EXPECT_EQ(exact_chromatic_underlying(fixtures::undirected(2, {{1, 2}}, Rational(0))), 1);
}

TEST(ChromaticUnderlying, MatchesEnumerationOracle) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const int n = 2 + static_cast<int>(seed % 7);
    const WeightedDigraph g = random_instance(n, 0.5, Dyadic{1}, seed);
    EXPECT_EQ(exact_chromatic_underlying(underlying_graph(g)), oracle::chromatic(n, oracle::simple_edges(g)));
  }
}

}  // namespace
}  // namespace wic
