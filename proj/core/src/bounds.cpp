#include "wic/bounds.hpp"

#include <algorithm>
#include <sstream>

#include "wic/errors.hpp"
#include "wic/exact.hpp"

namespace wic {

namespace {

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

int same_colored_neighbors(const UndirectedWeightedGraph& h, const Coloring& c, Vertex v, int color) {
  int count = 0;
  for (const Incidence& inc : h.neighbors(v)) {
    if (c[inc.other] == color) ++count;
  }
  return count;
}

}  // namespace

int BoundReport::best_upper() const {
  int best = std::min({upper_degree_weight, upper_sum_weights, upper_indegree});
  if (treewidth_cap) best = std::min(best, *treewidth_cap);
  return best;
}

std::string BoundReport::to_string() const {
  std::ostringstream out;
  out << "lower_chromatic=" << lower_chromatic << '\n'
      << "upper_degree_weight=" << upper_degree_weight << '\n'
      << "upper_sum_weights=" << upper_sum_weights << '\n'
      << "upper_indegree=" << upper_indegree << '\n';
  if (treewidth_cap) out << "treewidth_cap=" << *treewidth_cap << '\n';
  out << "best_upper=" << best_upper() << '\n';
  return out.str();
}

int lower_bound_chromatic(const UndirectedWeightedGraph& h) {
  const auto w_min = h.min_positive_weight();
  if (!w_min) return 1;
  const int chi = exact_chromatic_underlying(h);
  return static_cast<int>(ceil_div(chi, cap(*w_min) + 1));
}

int upper_bound_degree_weight(const WeightedDigraph& g) {
  const UndirectedWeightedGraph h = underlying_graph(g);
  const auto w_max = h.max_weight();
  if (!w_max || w_max->is_zero()) return 1;
  return static_cast<int>(ceil_div(h.max_degree(), cap(*w_max) + 1)) + 1;
}

int upper_bound_sum_weights(const WeightedDigraph& g) {
  return static_cast<int>(2 * isqrt_floor(2 * total_weight(g)) + 1);
}

int upper_bound_indegree(const WeightedDigraph& g) {
  return static_cast<int>((2 * max_weighted_indegree(g) + 1).floor());
}

BoundReport compute_bounds(const WeightedDigraph& g, const TreeDecomposition* decomposition) {
  BoundReport report;
  report.lower_chromatic = lower_bound_chromatic(underlying_graph(g));
  report.upper_degree_weight = upper_bound_degree_weight(g);
  report.upper_sum_weights = upper_bound_sum_weights(g);
  report.upper_indegree = upper_bound_indegree(g);
  if (decomposition) report.treewidth_cap = width(*decomposition) + 1;
  return report;
}

int monochromatic_edges(const UndirectedWeightedGraph& h, const Coloring& c) {
  int count = 0;
  for (const Edge& e : h.edges()) {
    if (c[e.u] == c[e.v]) ++count;
  }
  return count;
}

RecolorResult greedy_recolor(const WeightedDigraph& g, int k) {
  const int needed = upper_bound_degree_weight(g);
  if (k < needed) {
    throw PreconditionError("greedy_recolor needs k >= " + std::to_string(needed) + ", got " + std::to_string(k));
  }
  const UndirectedWeightedGraph h = underlying_graph(g);
  const int n = h.vertex_count();
  RecolorResult result{Coloring(n), 0};
  Coloring& c = result.coloring;
  for (Vertex v = 1; v <= n; ++v) c.assign(v, (v - 1) % k + 1);

  const auto w_max = h.max_weight();
  if (!w_max || w_max->is_zero()) return result;
  const std::int64_t allowed = cap(*w_max);

  int mono = monochromatic_edges(h, c);
  for (;;) {
    Vertex v = 0;
    for (Vertex u = 1; u <= n && v == 0; ++u) {
      if (same_colored_neighbors(h, c, u, c[u]) > allowed) v = u;
    }
    if (v == 0) break;
    int target = 0;
    for (int color = 1; color <= k && target == 0; ++color) {
      if (color != c[v] && same_colored_neighbors(h, c, v, color) <= allowed) target = color;
    }
    if (target == 0) throw Error("greedy_recolor: no admissible color class (bound violated)");
    c.assign(v, target);
    ++result.steps;
    const int next = monochromatic_edges(h, c);
    if (next >= mono) throw Error("greedy_recolor: monochromatic edge count did not decrease");
    mono = next;
  }
  return result;
}

RecolorResult subcubic_two_coloring(const UndirectedWeightedGraph& h) {
  for (const Edge& e : h.edges()) {
    if (e.weight.value() >= 1) {
      throw PreconditionError("WeightOne: edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                              "} has weight 1");
    }
  }
  const int n = h.vertex_count();
  for (Vertex v = 1; v <= n; ++v) {
    if (h.degree(v) > 3) {
      throw PreconditionError("DegreeAboveThree: vertex " + std::to_string(v) + " has degree " +
                              std::to_string(h.degree(v)));
    }
  }
  RecolorResult result{Coloring(n), 0};
  Coloring& c = result.coloring;
  for (Vertex v = 1; v <= n; ++v) c.assign(v, (v - 1) % 2 + 1);

  int mono = monochromatic_edges(h, c);
  for (;;) {
    Vertex v = 0;
    for (Vertex u = 1; u <= n && v == 0; ++u) {
      if (same_colored_neighbors(h, c, u, c[u]) >= 2) v = u;
    }
    if (v == 0) break;
    c.assign(v, 3 - c[v]);
    ++result.steps;
    const int next = monochromatic_edges(h, c);
    if (next >= mono) throw Error("subcubic_two_coloring: monochromatic edge count did not decrease");
    mono = next;
  }
  return result;
}

}  // namespace wic
