#pragma once

#include <string>

#include "wic/graph.hpp"
#include "wic/io.hpp"

namespace wic::fixtures {

inline std::string data_path(const std::string& name) { return std::string(WIC_TEST_DATA_DIR) + "/" + name; }

inline WeightedDigraph load(const std::string& name) { return parse_graph(read_file(data_path(name))); }

inline WeightedDigraph fig1() { return load("fig1.wig"); }
inline WeightedDigraph prism() { return load("prism.wug"); }
inline WeightedDigraph prism_light() { return load("prism_light.wug"); }

/// Every arc of a complete symmetric digraph on n vertices with weight w.
inline WeightedDigraph complete(int n, Rational w) {
  std::vector<Arc> arcs;
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = 1; v <= n; ++v) {
      if (u != v) arcs.push_back({u, v, Weight(w)});
    }
  }
  return WeightedDigraph(n, std::move(arcs));
}

inline UndirectedWeightedGraph undirected(int n, std::initializer_list<std::pair<int, int>> pairs, Rational w = 1) {
  std::vector<Edge> edges;
  for (auto [u, v] : pairs) edges.push_back({u, v, Weight(w)});
  return UndirectedWeightedGraph(n, std::move(edges));
}

}  // namespace wic::fixtures
