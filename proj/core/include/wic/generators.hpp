#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "wic/decomposition.hpp"
#include "wic/graph.hpp"

namespace wic {

/// Each edge {u, v} of H becomes arcs (u, v) and (v, u) of weight 1/(d+1), so
/// a d-defective k-coloring of H is exactly a weighted improper k-coloring of
/// the result. Edge weights of H are ignored. Throws PreconditionError for
/// d < 0.
WeightedDigraph reduce_defective(const UndirectedWeightedGraph& h, int d);

/// Adds a zero-weight arc for every ordered pair that has none.
WeightedDigraph complete_embed(const WeightedDigraph& g);

struct PartitionInstance {
  std::vector<std::int64_t> values;  // S
  std::int64_t sum = 0;              // X
  Rational epsilon;                  // 1 / (2 |S| X)
};

/// Checks S and fills in X and epsilon. Throws PreconditionError when S is
/// empty or holds a non-positive value.
PartitionInstance make_partition_instance(std::vector<std::int64_t> values);

struct PartitionGadget {
  PartitionInstance instance;
  WeightedDigraph graph;
  TreeDecomposition decomposition;
};

/// Hub vertices A = 1 and B = 2 joined by a weight-1 edge; element x_i is
/// vertex i + 2, joined to A and B by edges of weight
/// min(2 x_i / X - epsilon / |S|, 1). The graph is 2-colorable iff S splits
/// into two halves of equal sum. The decomposition is the path of bags
/// {A, v_i, B}, width 2.
PartitionGadget partition_instance(const std::vector<std::int64_t>& values);

/// Brute-force subset check: can S be split into two parts of equal sum?
bool is_partitionable(const std::vector<std::int64_t>& values);

struct UniformRational {
  std::int64_t max_denominator = 8;  // weights num/den with 1 <= den <= max_denominator, 0 <= num <= den
};
struct Dyadic {
  int bits = 3;  // weights k / 2^bits with 1 <= k <= 2^bits
};
using WeightModel = std::variant<UniformRational, Dyadic>;

/// Each ordered pair (u, v), u != v, carries an arc with the given
/// probability. Deterministic for a fixed seed. Throws PreconditionError on
/// n < 0, a probability outside [0, 1] or an invalid weight model.
WeightedDigraph random_instance(int n, double arc_probability, const WeightModel& model, std::uint64_t seed);

/// Random undirected graph with maximum degree 3 in which every vertex has at
/// most one incident weight-1 edge; other edges get weights k/den with
/// 1 <= k < den <= max_denominator. Edges are proposed in a seeded random
/// order and kept when both constraints still hold.
UndirectedWeightedGraph random_subcubic(int n, double edge_probability, double heavy_probability,
                                        std::int64_t max_denominator, std::uint64_t seed);

/// True when every vertex has degree at most 3 and at most one incident edge
/// of weight 1.
bool is_conjecture_instance(const UndirectedWeightedGraph& h);

}  // namespace wic
