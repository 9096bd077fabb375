#pragma once

#include <optional>

#include "wic/graph.hpp"

namespace wic {

/// Optimal color count with a witness that uses exactly colors 1..chromatic.
struct SolveResult {
  int chromatic = 0;
  Coloring witness;
};

struct ExactOptions {
  /// Instance-size guard; larger inputs throw LimitExceeded.
  int max_vertices = 16;
};

/// Backtracking search for a weighted improper k-coloring. Vertices are
/// colored in index order, colors tried ascending, and vertex i may use at
/// most one more than the largest color used so far. A branch is cut as soon
/// as a colored vertex's same-color indegree reaches 1.
std::optional<Coloring> find_weighted_coloring(const WeightedDigraph& g, int k, const ExactOptions& options = {});

/// Minimum k <= k_limit admitting a weighted improper k-coloring, or
/// std::nullopt when none exists within the limit.
std::optional<SolveResult> exact_chi_w(const WeightedDigraph& g, int k_limit, const ExactOptions& options = {});
/// As above with k_limit = n.
SolveResult exact_chi_w(const WeightedDigraph& g, const ExactOptions& options = {});

/// Every vertex has at most d neighbors of its own color. Weights are ignored.
bool is_defective_coloring(const UndirectedWeightedGraph& h, const Coloring& c, int d);

std::optional<Coloring> find_defective_coloring(const UndirectedWeightedGraph& h, int d, int k,
                                                const ExactOptions& options = {});

/// Minimum k <= k_limit admitting a d-defective k-coloring.
std::optional<SolveResult> exact_defective_number(const UndirectedWeightedGraph& h, int d, int k_limit,
                                                  const ExactOptions& options = {});

/// Largest graph accepted by exact_chromatic_underlying.
inline constexpr int kExactChromaticMaxVertices = 40;

/// Chromatic number of the graph formed by the positive-weight edges of H.
/// DSATUR branch and bound.
int exact_chromatic_underlying(const UndirectedWeightedGraph& h);

}  // namespace wic
