#include <gtest/gtest.h>

#include "support/fixtures.hpp"
#include "wic/errors.hpp"
#include "wic/generators.hpp"
#include "wic/io.hpp"

namespace wic {
namespace {

ParseErrorKind kind_of(const std::string& text) {
  try {
    parse_graph(text);
  } catch (const ParseError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no parse error for: " << text;
  return ParseErrorKind::Malformed;
}

int line_of(const std::string& text) {
  try {
    parse_graph(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

TEST(ParseGraph, MinimalFile) {
  const WeightedDigraph g = parse_graph("p wig 2 1\ne 1 2 1/2");
  EXPECT_EQ(g.vertex_count(), 2);
  ASSERT_EQ(g.arc_count(), 1u);
  EXPECT_EQ(g.arc(0), (Arc{1, 2, Weight(1, 2)}));
}

TEST(ParseGraph, CommentsBlankLinesAndDecimals) {
  const WeightedDigraph g = parse_graph("# header\n\np wig 3 2\n# arc\ne 2 1 0.7\ne 1 3 1\n");
  EXPECT_EQ(*g.weight(2, 1), Weight(7, 10));
  EXPECT_EQ(*g.weight(1, 3), Weight(1, 1));
}

TEST(ParseGraph, ErrorKindsCarryLineNumbers) {
  EXPECT_EQ(kind_of("p wig 2 1\ne 1 2 3/2"), ParseErrorKind::WeightOutOfRange);
  EXPECT_EQ(kind_of("p wig 2 2\ne 1 2 1/2\ne 1 2 1/4"), ParseErrorKind::DuplicateArc);
  EXPECT_EQ(kind_of("p wig 2 1\ne 1 3 1/2"), ParseErrorKind::IndexOutOfRange);
  EXPECT_EQ(kind_of("p wig 2 1\nx 1 2 1/2"), ParseErrorKind::Malformed);
  EXPECT_EQ(kind_of("p wig 2 1\ne 1 1/2"), ParseErrorKind::Malformed);
  EXPECT_EQ(kind_of("p wig 2 2\ne 1 2 1/2"), ParseErrorKind::Malformed);
  EXPECT_EQ(kind_of("e 1 2 1/2"), ParseErrorKind::Malformed);
  EXPECT_EQ(line_of("p wig 2 2\n\ne 1 2 1/2\ne 1 2 1/4"), 4);
  EXPECT_EQ(line_of("# c\np wig 2 1\ne 1 2 2"), 3);
}

TEST(ParseGraph, AcceptsUndirectedFiles) {
  const WeightedDigraph g = parse_graph("p wug 3 2\ne 1 2 1/2\ne 2 3\n");
  EXPECT_EQ(g.arc_count(), 4u);
  EXPECT_EQ(*g.weight(3, 2), Weight(1, 1));
}

TEST(SerializeGraph, CanonicalForm) {
  const WeightedDigraph g = parse_graph("p wig 3 3\ne 3 1 0.5\ne 1 2 2/4\ne 1 3 1\n");
  EXPECT_EQ(serialize_graph(g), "p wig 3 3\ne 1 2 1/2\ne 1 3 1/1\ne 3 1 1/2\n");
  EXPECT_EQ(serialize_graph(parse_graph(serialize_graph(g))), serialize_graph(g));
}

TEST(SerializeGraph, RoundTripOnRandomInstances) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const WeightedDigraph g = random_instance(8, 0.4, UniformRational{12}, seed);
    EXPECT_EQ(parse_graph(serialize_graph(g)), g);
  }
  const WeightedDigraph fig1 = fixtures::fig1();
  EXPECT_EQ(parse_graph(serialize_graph(fig1)), fig1);
}

TEST(Undirected, RoundTrip) {
  const UndirectedWeightedGraph h = parse_undirected(read_file(fixtures::data_path("prism.wug")));
  EXPECT_EQ(h.edge_count(), 15u);
  EXPECT_EQ(parse_undirected(serialize_undirected(h)), h);
}

TEST(ColoringFile, RoundTripAndErrors) {
  const Coloring c = parse_coloring("# c\n1 1\n3 2\n2 1\n", 3);
  EXPECT_EQ(c[3], 2);
  EXPECT_EQ(serialize_coloring(c), "1 1\n2 1\n3 2\n");
  EXPECT_EQ(parse_coloring(serialize_coloring(c), 3), c);
  EXPECT_THROW(parse_coloring("4 1\n", 3), ParseError);
  EXPECT_THROW(parse_coloring("1 0\n", 3), ParseError);
  EXPECT_THROW(parse_coloring("1 1\n1 2\n", 3), ParseError);
  EXPECT_THROW(parse_coloring("1\n", 3), ParseError);
}

TEST(DecompositionFile, RoundTrip) {
  TreeDecomposition d;
  d.bags = {{1, 2}, {2, 3}, {3, 4}};
  d.tree_edges = {{0, 1}, {1, 2}};
  d.root = 0;
  const std::string text = serialize_decomposition(d, 4);
  EXPECT_EQ(text.rfind("s td 3 2 4\n", 0), 0u);
  EXPECT_EQ(parse_decomposition(text), d);
}

TEST(DecompositionFile, RootIsFirstBagInFile) {
  TreeDecomposition d;
  d.bags = {{1, 2}, {2, 3}, {3, 4}};
  d.tree_edges = {{0, 1}, {1, 2}};
  d.root = 2;
  const TreeDecomposition back = parse_decomposition(serialize_decomposition(d, 4));
  EXPECT_EQ(back.bags[back.root], (VertexSet{3, 4}));
  EXPECT_EQ(width(back), 1);
}

TEST(DecompositionFile, Errors) {
  EXPECT_THROW(parse_decomposition("s td 2 2 3\nb 1 1 2\nb 3 2 3\n1 2\n"), ParseError);
  EXPECT_THROW(parse_decomposition("b 1 1 2\n"), ParseError);
  EXPECT_THROW(parse_decomposition("s td 1 2 3\nb 1 1 4\n"), ParseError);
}

}  // namespace
}  // namespace wic
