#include "wic/graph.hpp"

#include <algorithm>
#include <string>

#include "wic/errors.hpp"

namespace wic {

namespace {

std::string arc_name(Vertex tail, Vertex head) {
  return "(" + std::to_string(tail) + "," + std::to_string(head) + ")";
}

}  // namespace

WeightedDigraph::WeightedDigraph(int n, std::vector<Arc> arcs)
    : n_(n), arcs_(std::move(arcs)), in_(static_cast<std::size_t>(n) + 1), out_(static_cast<std::size_t>(n) + 1) {
  if (n < 0) throw PreconditionError("negative vertex count");
  std::sort(arcs_.begin(), arcs_.end(), [](const Arc& a, const Arc& b) {
    return std::pair(a.tail, a.head) < std::pair(b.tail, b.head);
  });
  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    const Arc& a = arcs_[i];
    if (!contains(a.tail) || !contains(a.head)) {
      throw PreconditionError("arc " + arc_name(a.tail, a.head) + " has an endpoint outside 1.." + std::to_string(n));
    }
    if (a.tail == a.head) throw PreconditionError("self-loop at vertex " + std::to_string(a.tail));
    if (i > 0 && arcs_[i - 1].tail == a.tail && arcs_[i - 1].head == a.head) {
      throw PreconditionError("duplicate arc " + arc_name(a.tail, a.head));
    }
    out_[a.tail].push_back({a.head, i});
    in_[a.head].push_back({a.tail, i});
  }
  for (auto& list : in_) {
    std::sort(list.begin(), list.end(), [](const Incidence& x, const Incidence& y) { return x.other < y.other; });
  }
}

std::optional<Weight> WeightedDigraph::weight(Vertex tail, Vertex head) const {
  if (!contains(tail)) return std::nullopt;
  for (const Incidence& inc : out_[tail]) {
    if (inc.other == head) return arcs_[inc.arc].weight;
  }
  return std::nullopt;
}

int WeightedDigraph::max_indegree() const {
  int best = 0;
  for (Vertex v = 1; v <= n_; ++v) best = std::max(best, indegree(v));
  return best;
}

UndirectedWeightedGraph::UndirectedWeightedGraph(int n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)), adj_(static_cast<std::size_t>(n) + 1) {
  if (n < 0) throw PreconditionError("negative vertex count");
  for (Edge& e : edges_) {
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end(),
            [](const Edge& a, const Edge& b) { return std::pair(a.u, a.v) < std::pair(b.u, b.v); });
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.u < 1 || e.v > n) {
      throw PreconditionError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} outside 1.." +
                              std::to_string(n));
    }
    if (e.u == e.v) throw PreconditionError("self-loop at vertex " + std::to_string(e.u));
    if (i > 0 && edges_[i - 1].u == e.u && edges_[i - 1].v == e.v) {
      throw PreconditionError("duplicate edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}");
    }
    adj_[e.u].push_back({e.v, i});
    adj_[e.v].push_back({e.u, i});
  }
  for (auto& list : adj_) {
    std::sort(list.begin(), list.end(), [](const Incidence& x, const Incidence& y) { return x.other < y.other; });
  }
}

int UndirectedWeightedGraph::max_degree() const {
  int best = 0;
  for (Vertex v = 1; v <= n_; ++v) best = std::max(best, degree(v));
  return best;
}

std::optional<Weight> UndirectedWeightedGraph::weight(Vertex u, Vertex v) const {
  if (u < 1 || u > n_) return std::nullopt;
  for (const Incidence& inc : adj_[u]) {
    if (inc.other == v) return edges_[inc.arc].weight;
  }
  return std::nullopt;
}

std::optional<Weight> UndirectedWeightedGraph::min_positive_weight() const {
  std::optional<Weight> best;
  for (const Edge& e : edges_) {
    if (!e.weight.is_zero() && (!best || e.weight < *best)) best = e.weight;
  }
  return best;
}

std::optional<Weight> UndirectedWeightedGraph::max_weight() const {
  std::optional<Weight> best;
  for (const Edge& e : edges_) {
    if (!best || e.weight > *best) best = e.weight;
  }
  return best;
}

UndirectedWeightedGraph UndirectedWeightedGraph::without_zero_edges() const {
  std::vector<Edge> kept;
  for (const Edge& e : edges_) {
    if (!e.weight.is_zero()) kept.push_back(e);
  }
  return UndirectedWeightedGraph(n_, std::move(kept));
}

Coloring Coloring::from_colors(std::span<const int> colors) {
  Coloring c(static_cast<int>(colors.size()));
  for (std::size_t i = 0; i < colors.size(); ++i) c.colors_[i + 1] = colors[i];
  return c;
}

void Coloring::assign(Vertex v, int color) {
  if (v < 1 || v > vertex_count()) throw PreconditionError("vertex " + std::to_string(v) + " out of range");
  if (color < 1) throw PreconditionError("colors must be positive");
  colors_[v] = color;
}

bool Coloring::is_total() const {
  return std::all_of(colors_.begin() + 1, colors_.end(), [](int c) { return c != 0; });
}

int Coloring::max_color() const { return *std::max_element(colors_.begin(), colors_.end()); }

int Coloring::distinct_colors() const {
  std::vector<int> seen(colors_.begin() + 1, colors_.end());
  std::sort(seen.begin(), seen.end());
  seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
  return static_cast<int>(std::count_if(seen.begin(), seen.end(), [](int c) { return c != 0; }));
}

Rational weighted_indegree(const WeightedDigraph& g, Vertex v, const VertexSet& subset) {
  if (!g.contains(v)) throw PreconditionError("vertex " + std::to_string(v) + " out of range");
  std::vector<char> member(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
  for (Vertex u : subset) {
    if (!g.contains(u)) throw PreconditionError("vertex " + std::to_string(u) + " out of range");
    member[u] = 1;
  }
  if (!member[v]) return 0;
  Rational sum;
  for (const Incidence& inc : g.in_arcs(v)) {
    if (member[inc.other]) sum += g.arc(inc.arc).weight;
  }
  return sum;
}

Rational weighted_indegree(const WeightedDigraph& g, Vertex v) {
  if (!g.contains(v)) throw PreconditionError("vertex " + std::to_string(v) + " out of range");
  Rational sum;
  for (const Incidence& inc : g.in_arcs(v)) sum += g.arc(inc.arc).weight;
  return sum;
}

namespace {

void require_total(const WeightedDigraph& g, const Coloring& c) {
  if (c.vertex_count() != g.vertex_count()) {
    throw PreconditionError("coloring covers " + std::to_string(c.vertex_count()) + " vertices, graph has " +
                            std::to_string(g.vertex_count()));
  }
  if (!c.is_total()) throw PreconditionError("coloring is partial");
}

}  // namespace

Rational same_color_indegree(const WeightedDigraph& g, const Coloring& c, Vertex v) {
  require_total(g, c);
  Rational sum;
  for (const Incidence& inc : g.in_arcs(v)) {
    if (c[inc.other] == c[v]) sum += g.arc(inc.arc).weight;
  }
  return sum;
}

std::optional<ColoringViolation> find_violation(const WeightedDigraph& g, const Coloring& c) {
  require_total(g, c);
  for (Vertex v = 1; v <= g.vertex_count(); ++v) {
    Rational d = same_color_indegree(g, c, v);
    if (d >= 1) return ColoringViolation{v, d};
  }
  return std::nullopt;
}

bool is_valid_coloring(const WeightedDigraph& g, const Coloring& c) { return !find_violation(g, c).has_value(); }

Rational max_weighted_indegree(const WeightedDigraph& g) {
  Rational best;
  for (Vertex v = 1; v <= g.vertex_count(); ++v) best = std::max(best, weighted_indegree(g, v));
  return best;
}

Rational total_weight(const WeightedDigraph& g) {
  Rational sum;
  for (const Arc& a : g.arcs()) sum += a.weight;
  return sum;
}

UndirectedWeightedGraph underlying_graph(const WeightedDigraph& g) {
  std::vector<Edge> edges;
  for (const Arc& a : g.arcs()) {
    if (a.tail < a.head) {
      Weight w = a.weight;
      if (auto back = g.weight(a.head, a.tail)) w = std::max(w, *back);
      edges.push_back({a.tail, a.head, w});
    } else if (!g.has_arc(a.head, a.tail)) {
      edges.push_back({a.head, a.tail, a.weight});
    }
  }
  return UndirectedWeightedGraph(g.vertex_count(), std::move(edges));
}

WeightedDigraph embed_undirected(const UndirectedWeightedGraph& h) {
  std::vector<Arc> arcs;
  arcs.reserve(2 * h.edge_count());
  for (const Edge& e : h.edges()) {
    arcs.push_back({e.u, e.v, e.weight});
    arcs.push_back({e.v, e.u, e.weight});
  }
  return WeightedDigraph(h.vertex_count(), std::move(arcs));
}

UnitWeights unit_weights(const WeightedDigraph& g) {
  UnitWeights out;
  for (const Arc& a : g.arcs()) out.denominator = checked::lcm(out.denominator, a.weight.value().den());
  out.units.reserve(g.arc_count());
  for (const Arc& a : g.arcs()) {
    out.units.push_back(checked::mul(a.weight.value().num(), out.denominator / a.weight.value().den()));
  }
  return out;
}

}  // namespace wic
