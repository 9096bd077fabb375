#include "wic/exact.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

#include "wic/errors.hpp"

namespace wic {

namespace {

void guard(int n, const ExactOptions& options) {
  if (n > options.max_vertices) {
    throw LimitExceeded("exact search is limited to " + std::to_string(options.max_vertices) +
                        " vertices, instance has " + std::to_string(n));
  }
}

class WeightedSearch {
 public:
  WeightedSearch(const WeightedDigraph& g, int k)
      : g_(g), units_(unit_weights(g)), k_(k), color_(static_cast<std::size_t>(g.vertex_count()) + 1, 0),
        spent_(static_cast<std::size_t>(g.vertex_count()) + 1, 0) {}

  std::optional<Coloring> run() {
    if (!extend(1, 0)) return std::nullopt;
    Coloring out(g_.vertex_count());
    for (Vertex v = 1; v <= g_.vertex_count(); ++v) out.assign(v, color_[v]);
    return out;
  }

 private:
  // Charges v's color against v and its colored out-neighbors; returns false
  // (after rolling back) if some budget is exhausted.
  bool place(Vertex v, int c) {
    color_[v] = c;
    bool ok = true;
    for (const Incidence& inc : g_.in_arcs(v)) {
      if (color_[inc.other] == c) spent_[v] += units_.units[inc.arc];
    }
    if (spent_[v] >= units_.denominator) ok = false;
    for (const Incidence& inc : g_.out_arcs(v)) {
      if (inc.other != v && color_[inc.other] == c) {
        spent_[inc.other] += units_.units[inc.arc];
        if (spent_[inc.other] >= units_.denominator) ok = false;
      }
    }
    if (!ok) unplace(v);
    return ok;
  }

  void unplace(Vertex v) {
    const int c = color_[v];
    for (const Incidence& inc : g_.out_arcs(v)) {
      if (color_[inc.other] == c) spent_[inc.other] -= units_.units[inc.arc];
    }
    spent_[v] = 0;
    color_[v] = 0;
  }

  bool extend(Vertex v, int used) {
    if (v > g_.vertex_count()) return true;
    const int top = std::min(k_, used + 1);
    for (int c = 1; c <= top; ++c) {
      if (!place(v, c)) continue;
      if (extend(v + 1, std::max(used, c))) return true;
      unplace(v);
    }
    return false;
  }

  const WeightedDigraph& g_;
  UnitWeights units_;
  int k_;
  std::vector<int> color_;
  std::vector<std::int64_t> spent_;
};

class DefectiveSearch {
 public:
  DefectiveSearch(const UndirectedWeightedGraph& h, int d, int k)
      : h_(h), d_(d), k_(k), color_(static_cast<std::size_t>(h.vertex_count()) + 1, 0),
        same_(static_cast<std::size_t>(h.vertex_count()) + 1, 0) {}

  std::optional<Coloring> run() {
    if (!extend(1, 0)) return std::nullopt;
    Coloring out(h_.vertex_count());
    for (Vertex v = 1; v <= h_.vertex_count(); ++v) out.assign(v, color_[v]);
    return out;
  }

 private:
  bool extend(Vertex v, int used) {
    if (v > h_.vertex_count()) return true;
    const int top = std::min(k_, used + 1);
    for (int c = 1; c <= top; ++c) {
      color_[v] = c;
      bool ok = true;
      for (const Incidence& inc : h_.neighbors(v)) {
        if (color_[inc.other] == c && inc.other != v) {
          ++same_[v];
          if (++same_[inc.other] > d_) ok = false;
        }
      }
      if (same_[v] > d_) ok = false;
      if (ok && extend(v + 1, std::max(used, c))) return true;
      for (const Incidence& inc : h_.neighbors(v)) {
        if (color_[inc.other] == c && inc.other != v) --same_[inc.other];
      }
      same_[v] = 0;
      color_[v] = 0;
    }
    return false;
  }

  const UndirectedWeightedGraph& h_;
  int d_;
  int k_;
  std::vector<int> color_;
  std::vector<int> same_;
};

}  // namespace

std::optional<Coloring> find_weighted_coloring(const WeightedDigraph& g, int k, const ExactOptions& options) {
  guard(g.vertex_count(), options);
  if (k < 1) throw PreconditionError("color count must be at least 1");
  return WeightedSearch(g, k).run();
}

std::optional<SolveResult> exact_chi_w(const WeightedDigraph& g, int k_limit, const ExactOptions& options) {
  guard(g.vertex_count(), options);
  if (k_limit < 1) throw PreconditionError("k_limit must be at least 1");
  if (g.vertex_count() == 0) return SolveResult{0, Coloring(0)};
  for (int k = 1; k <= k_limit; ++k) {
    if (auto c = WeightedSearch(g, k).run()) return SolveResult{k, std::move(*c)};
  }
  return std::nullopt;
}

SolveResult exact_chi_w(const WeightedDigraph& g, const ExactOptions& options) {
  auto result = exact_chi_w(g, std::max(1, g.vertex_count()), options);
  // n colors always suffice: a proper coloring has no same-color arcs.
  return std::move(*result);
}

bool is_defective_coloring(const UndirectedWeightedGraph& h, const Coloring& c, int d) {
  if (c.vertex_count() != h.vertex_count()) throw PreconditionError("coloring size does not match the graph");
  if (!c.is_total()) throw PreconditionError("coloring is partial");
  for (Vertex v = 1; v <= h.vertex_count(); ++v) {
    int same = 0;
    for (const Incidence& inc : h.neighbors(v)) {
      if (c[inc.other] == c[v]) ++same;
    }
    if (same > d) return false;
  }
  return true;
}

std::optional<Coloring> find_defective_coloring(const UndirectedWeightedGraph& h, int d, int k,
                                                const ExactOptions& options) {
  guard(h.vertex_count(), options);
  if (k < 1) throw PreconditionError("color count must be at least 1");
  if (d < 0) throw PreconditionError("defect must be nonnegative");
  return DefectiveSearch(h, d, k).run();
}

std::optional<SolveResult> exact_defective_number(const UndirectedWeightedGraph& h, int d, int k_limit,
                                                  const ExactOptions& options) {
  guard(h.vertex_count(), options);
  if (k_limit < 1) throw PreconditionError("k_limit must be at least 1");
  if (d < 0) throw PreconditionError("defect must be nonnegative");
  if (h.vertex_count() == 0) return SolveResult{0, Coloring(0)};
  for (int k = 1; k <= k_limit; ++k) {
    if (auto c = DefectiveSearch(h, d, k).run()) return SolveResult{k, std::move(*c)};
  }
  return std::nullopt;
}

namespace {

class Dsatur {
 public:
  explicit Dsatur(const UndirectedWeightedGraph& h) : n_(h.vertex_count()), adj_(n_, 0), color_(n_, 0) {
    for (const Edge& e : h.edges()) {
      adj_[e.u - 1] |= std::uint64_t{1} << (e.v - 1);
      adj_[e.v - 1] |= std::uint64_t{1} << (e.u - 1);
    }
  }

  int solve() {
    if (n_ == 0) return 0;
    best_ = n_ + 1;
    search(0, 0);
    return best_;
  }

 private:
  int saturation(int v) const {
    std::uint64_t seen = 0;
    std::uint64_t nb = adj_[v];
    while (nb) {
      const int u = std::countr_zero(nb);
      nb &= nb - 1;
      if (color_[u]) seen |= std::uint64_t{1} << color_[u];
    }
    return std::popcount(seen);
  }

  int uncolored_degree(int v) const {
    int deg = 0;
    std::uint64_t nb = adj_[v];
    while (nb) {
      const int u = std::countr_zero(nb);
      nb &= nb - 1;
      if (!color_[u]) ++deg;
    }
    return deg;
  }

  void search(int colored, int used) {
    if (used >= best_) return;
    if (colored == n_) {
      best_ = used;
      return;
    }
    int pick = -1;
    int pick_sat = -1;
    int pick_deg = -1;
    for (int v = 0; v < n_; ++v) {
      if (color_[v]) continue;
      const int sat = saturation(v);
      const int deg = uncolored_degree(v);
      if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
        pick = v;
        pick_sat = sat;
        pick_deg = deg;
      }
    }
    for (int c = 1; c <= used + 1 && c < best_; ++c) {
      bool clash = false;
      std::uint64_t nb = adj_[pick];
      while (nb) {
        const int u = std::countr_zero(nb);
        nb &= nb - 1;
        if (color_[u] == c) {
          clash = true;
          break;
        }
      }
      if (clash) continue;
      color_[pick] = c;
      search(colored + 1, std::max(used, c));
      color_[pick] = 0;
    }
  }

  int n_;
  std::vector<std::uint64_t> adj_;
  std::vector<int> color_;
  int best_ = 0;
};

}  // namespace

int exact_chromatic_underlying(const UndirectedWeightedGraph& h) {
  if (h.vertex_count() > kExactChromaticMaxVertices) {
    throw LimitExceeded("exact chromatic number is limited to " + std::to_string(kExactChromaticMaxVertices) +
                        " vertices, graph has " + std::to_string(h.vertex_count()));
  }
  return Dsatur(h.without_zero_edges()).solve();
}

}  // namespace wic
