#pragma once

#include <optional>
#include <string>

#include "wic/decomposition.hpp"
#include "wic/graph.hpp"

namespace wic {

/// Lower and upper bounds on the weighted improper chromatic number.
struct BoundReport {
  int lower_chromatic = 0;
  int upper_degree_weight = 0;
  int upper_sum_weights = 0;
  int upper_indegree = 0;
  std::optional<int> treewidth_cap;  // width + 1, when a decomposition is known

  int best_upper() const;
  /// `key=value` lines in a fixed order.
  std::string to_string() const;
};

/// ceil(chi(H+) / (cap(w_min) + 1)) where H+ keeps only positive-weight edges;
/// 1 when no edge has positive weight.
int lower_bound_chromatic(const UndirectedWeightedGraph& h);

/// ceil(maxdeg / (cap(w_max) + 1)) + 1 over the underlying graph; 1 when every
/// weight is zero.
int upper_bound_degree_weight(const WeightedDigraph& g);

/// 2 * floor(sqrt(2W)) + 1 with W the total arc weight.
int upper_bound_sum_weights(const WeightedDigraph& g);

/// floor(2 * max weighted indegree + 1).
int upper_bound_indegree(const WeightedDigraph& g);

BoundReport compute_bounds(const WeightedDigraph& g, const TreeDecomposition* decomposition = nullptr);

struct RecolorResult {
  Coloring coloring;
  int steps = 0;
};

/// Starts from the round-robin coloring v -> ((v - 1) mod k) + 1 and, while
/// some vertex has more than cap(w_max) same-colored neighbors in the
/// underlying graph, moves the smallest such vertex to the smallest color
/// class in which it has at most cap(w_max) neighbors. Requires
/// k >= upper_bound_degree_weight(g).
RecolorResult greedy_recolor(const WeightedDigraph& g, int k);

/// Flip procedure for graphs with maximum degree 3 and all weights below 1:
/// starts from v -> ((v - 1) mod 2) + 1 and flips the smallest vertex with two
/// or more same-colored neighbors until none is left.
RecolorResult subcubic_two_coloring(const UndirectedWeightedGraph& h);

/// Number of edges of the underlying graph whose endpoints share a color.
int monochromatic_edges(const UndirectedWeightedGraph& h, const Coloring& c);

}  // namespace wic
