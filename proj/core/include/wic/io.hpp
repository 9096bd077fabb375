#pragma once

#include <string>
#include <string_view>

#include "wic/decomposition.hpp"
#include "wic/graph.hpp"

namespace wic {

// Text formats (UTF-8, LF). Lines starting with '#' are comments; blank lines
// are ignored.
//
//   p wig <n> <m>              directed graph header, then m lines
//   e <tail> <head> <weight>   weight as num/den, integer, or decimal
//
//   p wug <n> <m>              undirected graph header, then m lines
//   e <u> <v> [<weight>]       weight defaults to 1 when omitted
//
//   <vertex> <color>           coloring, one line per vertex
//
//   s td <bags> <max-bag-size> <n>    PACE-2017 tree decomposition; bags and
//   b <bag-id> <v...>                 bag ids are 1-based, root is bag 1
//   <i> <j>
//
// Serializers emit the canonical form: weights as reduced num/den, arcs
// sorted by (tail, head), coloring lines sorted by vertex.

/// Parses a `p wig` file, or a `p wug` file through embed_undirected().
WeightedDigraph parse_graph(std::string_view text);
std::string serialize_graph(const WeightedDigraph& g);

/// Parses a `p wug` file.
UndirectedWeightedGraph parse_undirected(std::string_view text);
std::string serialize_undirected(const UndirectedWeightedGraph& h);

/// Coloring over vertices 1..n; the result may be partial.
Coloring parse_coloring(std::string_view text, int n);
/// Assigned vertices only.
std::string serialize_coloring(const Coloring& c);

TreeDecomposition parse_decomposition(std::string_view text);
std::string serialize_decomposition(const TreeDecomposition& d, int n);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace wic
