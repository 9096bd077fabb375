#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "wic/rational.hpp"

namespace wic {

/// Vertices are dense and 1-based: a graph on n vertices uses 1..n.
using Vertex = int;
using VertexSet = std::vector<Vertex>;

struct Arc {
  Vertex tail = 0;
  Vertex head = 0;
  Weight weight;

  friend bool operator==(const Arc&, const Arc&) = default;
};

/// One incident arc seen from a fixed endpoint.
struct Incidence {
  Vertex other = 0;
  std::size_t arc = 0;  // index into WeightedDigraph::arcs()
};

/// G = (V, E, w): at most one arc per ordered pair, no self-loops. Arcs are
/// kept sorted by (tail, head). Immutable after construction.
class WeightedDigraph {
 public:
  WeightedDigraph() = default;
  /// Throws PreconditionError on self-loops, duplicate arcs or out-of-range
  /// endpoints.
  WeightedDigraph(int n, std::vector<Arc> arcs);

  int vertex_count() const { return n_; }
  std::size_t arc_count() const { return arcs_.size(); }
  std::span<const Arc> arcs() const { return arcs_; }
  const Arc& arc(std::size_t index) const { return arcs_[index]; }

  std::span<const Incidence> in_arcs(Vertex v) const { return in_[v]; }
  std::span<const Incidence> out_arcs(Vertex v) const { return out_[v]; }

  std::optional<Weight> weight(Vertex tail, Vertex head) const;
  bool has_arc(Vertex tail, Vertex head) const { return weight(tail, head).has_value(); }

  /// Unweighted indegree.
  int indegree(Vertex v) const { return static_cast<int>(in_[v].size()); }
  /// Maximum unweighted indegree.
  int max_indegree() const;

  bool contains(Vertex v) const { return v >= 1 && v <= n_; }

  friend bool operator==(const WeightedDigraph& a, const WeightedDigraph& b) {
    return a.n_ == b.n_ && a.arcs_ == b.arcs_;
  }

 private:
  int n_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::vector<Incidence>> in_;
  std::vector<std::vector<Incidence>> out_;
};

struct Edge {
  Vertex u = 0;  // u < v
  Vertex v = 0;
  Weight weight;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Simple undirected weighted graph; edges normalized to u < v and sorted.
class UndirectedWeightedGraph {
 public:
  UndirectedWeightedGraph() = default;
  UndirectedWeightedGraph(int n, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }

  /// Neighbors of v as (other endpoint, edge index).
  std::span<const Incidence> neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  int max_degree() const;

  std::optional<Weight> weight(Vertex u, Vertex v) const;

  /// Smallest positive edge weight, if any edge has one.
  std::optional<Weight> min_positive_weight() const;
  std::optional<Weight> max_weight() const;

  /// Same vertex set, edges of weight zero dropped.
  UndirectedWeightedGraph without_zero_edges() const;

  friend bool operator==(const UndirectedWeightedGraph& a, const UndirectedWeightedGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adj_;
};

/// Map vertex -> color in {1, 2, ...}; color 0 means "unassigned".
class Coloring {
 public:
  Coloring() = default;
  explicit Coloring(int n) : colors_(static_cast<std::size_t>(n) + 1, 0) {}
  /// colors[0] is vertex 1.
  static Coloring from_colors(std::span<const int> colors);

  int vertex_count() const { return static_cast<int>(colors_.size()) - 1; }
  int operator[](Vertex v) const { return colors_[v]; }
  bool assigned(Vertex v) const { return colors_[v] != 0; }
  void assign(Vertex v, int color);
  void clear(Vertex v) { colors_[v] = 0; }

  bool is_total() const;
  /// Highest color index in use, 0 when nothing is assigned.
  int max_color() const;
  /// Number of distinct colors in use.
  int distinct_colors() const;

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  std::vector<int> colors_{0};
};

/// Sum of w(u, v) over arcs (u, v) with u in S, provided v is in S; 0 otherwise.
Rational weighted_indegree(const WeightedDigraph& g, Vertex v, const VertexSet& subset);
/// Weighted indegree over the whole vertex set.
Rational weighted_indegree(const WeightedDigraph& g, Vertex v);
/// Weighted indegree of v from vertices sharing its color under a total coloring.
Rational same_color_indegree(const WeightedDigraph& g, const Coloring& c, Vertex v);

struct ColoringViolation {
  Vertex vertex = 0;
  Rational indegree;  // same-color weighted indegree, >= 1
};

/// First vertex (by index) whose same-color indegree reaches 1, if any.
/// Throws PreconditionError on a partial coloring or a size mismatch.
std::optional<ColoringViolation> find_violation(const WeightedDigraph& g, const Coloring& c);
bool is_valid_coloring(const WeightedDigraph& g, const Coloring& c);

/// Maximum weighted indegree (0 for an empty or arcless graph).
Rational max_weighted_indegree(const WeightedDigraph& g);

/// Sum of all arc weights.
Rational total_weight(const WeightedDigraph& g);

/// Edge {u, v} for every arc in either direction; weight is the larger of the
/// two arc weights.
UndirectedWeightedGraph underlying_graph(const WeightedDigraph& g);

/// Each edge {u, v} of weight w becomes arcs (u, v) and (v, u), both weight w.
WeightedDigraph embed_undirected(const UndirectedWeightedGraph& h);

/// Arc weights rescaled to integers over a common denominator, so that
/// "indegree < 1" becomes "units < denominator".
struct UnitWeights {
  std::int64_t denominator = 1;
  std::vector<std::int64_t> units;  // parallel to WeightedDigraph::arcs()
};

/// Throws OverflowError when the common denominator does not fit in 64 bits.
UnitWeights unit_weights(const WeightedDigraph& g);

}  // namespace wic
