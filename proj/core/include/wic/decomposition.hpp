#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wic/graph.hpp"

namespace wic {

/// Bags X_0..X_{m-1} joined by tree edges, plus a designated root bag.
/// Bag indices are 0-based in this API; the PACE file format numbers bags
/// from 1. Bags are stored sorted.
struct TreeDecomposition {
  std::vector<VertexSet> bags;
  std::vector<std::pair<int, int>> tree_edges;
  int root = 0;

  int bag_count() const { return static_cast<int>(bags.size()); }
  friend bool operator==(const TreeDecomposition&, const TreeDecomposition&) = default;
};

/// max |X_i| - 1; a single empty bag has width -1.
int width(const TreeDecomposition& d);

/// Same bags and edges with a different root. Throws PreconditionError when
/// the index is out of range.
TreeDecomposition root_at(const TreeDecomposition& d, int bag);

struct DecompositionViolation {
  /// 0: bag tree is not a tree (or indices bad), 1: vertex coverage,
  /// 2: arc coverage, 3: connected-subtree property.
  int property = 0;
  std::string witness;
  std::string to_string() const;
};

/// std::nullopt when D is a tree decomposition of the underlying graph of G.
std::optional<DecompositionViolation> validate_decomposition(const WeightedDigraph& g, const TreeDecomposition& d);

enum class DecompositionStrategy { MinDegree, MinFill, ExactSmall };

const char* to_string(DecompositionStrategy strategy);
std::optional<DecompositionStrategy> parse_strategy(const std::string& name);

/// Largest graph accepted by DecompositionStrategy::ExactSmall.
inline constexpr int kExactTreewidthMaxVertices = 20;

/// Elimination-ordering decomposition of the underlying graph. ExactSmall is
/// minimum width and throws LimitExceeded above kExactTreewidthMaxVertices.
/// The root is bag 0 (the bag of the last eliminated vertex).
TreeDecomposition build_decomposition(const WeightedDigraph& g, DecompositionStrategy strategy);

/// Decomposition induced by eliminating vertices in the given order.
TreeDecomposition decomposition_from_order(const UndirectedWeightedGraph& h, const std::vector<Vertex>& order);

/// Parent/children/depth view of a validated decomposition.
class RootedTree {
 public:
  explicit RootedTree(const TreeDecomposition& d);

  int root() const { return root_; }
  int bag_count() const { return static_cast<int>(parent_.size()); }
  /// -1 for the root.
  int parent(int bag) const { return parent_[bag]; }
  /// Children in ascending bag-index order.
  const std::vector<int>& children(int bag) const { return children_[bag]; }
  int depth(int bag) const { return depth_[bag]; }
  /// Bags in BFS order from the root (parents before children).
  const std::vector<int>& preorder() const { return order_; }

 private:
  int root_ = 0;
  std::vector<int> parent_;
  std::vector<std::vector<int>> children_;
  std::vector<int> depth_;
  std::vector<int> order_;
};

/// X_i together with all in-neighbors of vertices in X_i.
VertexSet extended_bag(const WeightedDigraph& g, const VertexSet& bag);

enum class DecidingMode { BagOnly, BagPlusInNeighbors };

/// The rootmost bag whose relevant set (X_i, or X_i plus in-neighbors)
/// contains v. Requires a validated decomposition.
int deciding_bag(const TreeDecomposition& d, const WeightedDigraph& g, Vertex v, DecidingMode mode);

}  // namespace wic
