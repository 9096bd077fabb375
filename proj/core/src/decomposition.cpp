#include "wic/decomposition.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <queue>
#include <set>
#include <unordered_map>

#include "wic/errors.hpp"

namespace wic {

int width(const TreeDecomposition& d) {
  int largest = 0;
  for (const VertexSet& bag : d.bags) largest = std::max(largest, static_cast<int>(bag.size()));
  return largest - 1;
}

TreeDecomposition root_at(const TreeDecomposition& d, int bag) {
  if (bag < 0 || bag >= d.bag_count()) throw PreconditionError("root bag " + std::to_string(bag) + " out of range");
  TreeDecomposition out = d;
  out.root = bag;
  return out;
}

std::string DecompositionViolation::to_string() const {
  static const char* const kNames[] = {"bag tree", "vertex coverage", "arc coverage", "connected subtree"};
  return std::string("property ") + std::to_string(property) + " (" + kNames[property] + "): " + witness;
}

namespace {

int find(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

std::vector<std::vector<int>> tree_adjacency(const TreeDecomposition& d) {
  std::vector<std::vector<int>> adj(d.bags.size());
  for (auto [a, b] : d.tree_edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return adj;
}

}  // namespace

std::optional<DecompositionViolation> validate_decomposition(const WeightedDigraph& g, const TreeDecomposition& d) {
  const int m = d.bag_count();
  const int n = g.vertex_count();
  if (m == 0) return DecompositionViolation{0, "no bags"};
  if (d.root < 0 || d.root >= m) return DecompositionViolation{0, "root bag " + std::to_string(d.root) + " out of range"};
  if (static_cast<int>(d.tree_edges.size()) != m - 1) {
    return DecompositionViolation{0, std::to_string(d.tree_edges.size()) + " tree edges for " + std::to_string(m) + " bags"};
  }
  std::vector<int> uf(m);
  std::iota(uf.begin(), uf.end(), 0);
  for (auto [a, b] : d.tree_edges) {
    if (a < 0 || a >= m || b < 0 || b >= m) {
      return DecompositionViolation{0, "tree edge (" + std::to_string(a) + "," + std::to_string(b) + ") out of range"};
    }
    const int ra = find(uf, a);
    const int rb = find(uf, b);
    if (ra == rb) {
      return DecompositionViolation{0, "tree edge (" + std::to_string(a) + "," + std::to_string(b) + ") closes a cycle"};
    }
    uf[ra] = rb;
  }

  std::vector<std::vector<int>> bags_of(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i < m; ++i) {
    for (Vertex v : d.bags[i]) {
      if (!g.contains(v)) return DecompositionViolation{0, "bag " + std::to_string(i) + " holds vertex " + std::to_string(v) + " outside the graph"};
      bags_of[v].push_back(i);
    }
  }
  for (Vertex v = 1; v <= n; ++v) {
    if (bags_of[v].empty()) return DecompositionViolation{1, "vertex " + std::to_string(v)};
  }

  std::vector<std::vector<char>> in_bag(m, std::vector<char>(static_cast<std::size_t>(n) + 1, 0));
  for (int i = 0; i < m; ++i) {
    for (Vertex v : d.bags[i]) in_bag[i][v] = 1;
  }
  const auto adj = tree_adjacency(d);
  std::vector<char> seen(m, 0);
  for (Vertex v = 1; v <= n; ++v) {
    // BFS restricted to bags containing v must reach all of them.
    std::fill(seen.begin(), seen.end(), 0);
    std::queue<int> queue;
    queue.push(bags_of[v].front());
    seen[bags_of[v].front()] = 1;
    std::size_t reached = 1;
    while (!queue.empty()) {
      const int i = queue.front();
      queue.pop();
      for (int j : adj[i]) {
        if (!seen[j] && in_bag[j][v]) {
          seen[j] = 1;
          ++reached;
          queue.push(j);
        }
      }
    }
    if (reached != bags_of[v].size()) return DecompositionViolation{3, "vertex " + std::to_string(v)};
  }

  // Checked after connectivity so that a vertex dropped from an interior bag
  // is reported as the broken subtree it causes.
  for (const Arc& a : g.arcs()) {
    bool covered = false;
    for (int i : bags_of[a.tail]) {
      if (in_bag[i][a.head]) {
        covered = true;
        break;
      }
    }
    if (!covered) {
      return DecompositionViolation{2, "arc (" + std::to_string(a.tail) + "," + std::to_string(a.head) + ")"};
    }
  }
  return std::nullopt;
}

const char* to_string(DecompositionStrategy strategy) {
  switch (strategy) {
    case DecompositionStrategy::MinDegree:
      return "min-degree";
    case DecompositionStrategy::MinFill:
      return "min-fill";
    case DecompositionStrategy::ExactSmall:
      return "exact-small";
  }
  return "unknown";
}

std::optional<DecompositionStrategy> parse_strategy(const std::string& name) {
  if (name == "min-degree") return DecompositionStrategy::MinDegree;
  if (name == "min-fill") return DecompositionStrategy::MinFill;
  if (name == "exact-small") return DecompositionStrategy::ExactSmall;
  return std::nullopt;
}

TreeDecomposition decomposition_from_order(const UndirectedWeightedGraph& h, const std::vector<Vertex>& order) {
  const int n = h.vertex_count();
  if (n == 0) return TreeDecomposition{{VertexSet{}}, {}, 0};
  if (static_cast<int>(order.size()) != n) throw PreconditionError("elimination order must list every vertex once");

  std::vector<int> position(static_cast<std::size_t>(n) + 1, -1);
  for (int i = 0; i < n; ++i) {
    const Vertex v = order[i];
    if (v < 1 || v > n || position[v] != -1) throw PreconditionError("elimination order must list every vertex once");
    position[v] = i;
  }

  std::vector<std::set<Vertex>> adj(static_cast<std::size_t>(n) + 1);
  for (const Edge& e : h.edges()) {
    adj[e.u].insert(e.v);
    adj[e.v].insert(e.u);
  }

  TreeDecomposition d;
  d.bags.resize(n);
  d.root = 0;
  auto index_of = [&](Vertex v) { return n - 1 - position[v]; };
  for (const Vertex v : order) {
    const std::set<Vertex> nbrs = adj[v];
    VertexSet bag(nbrs.begin(), nbrs.end());
    bag.push_back(v);
    std::sort(bag.begin(), bag.end());
    d.bags[index_of(v)] = std::move(bag);

    if (nbrs.empty()) {
      if (index_of(v) != 0) d.tree_edges.emplace_back(0, index_of(v));
    } else {
      const Vertex next = *std::min_element(nbrs.begin(), nbrs.end(),
                                            [&](Vertex a, Vertex b) { return position[a] < position[b]; });
      d.tree_edges.emplace_back(index_of(next), index_of(v));
    }
    for (Vertex a : nbrs) {
      adj[a].erase(v);
      for (Vertex b : nbrs) {
        if (a != b) adj[a].insert(b);
      }
    }
    adj[v].clear();
  }
  std::sort(d.tree_edges.begin(), d.tree_edges.end());
  return d;
}

namespace {

std::vector<Vertex> greedy_order(const UndirectedWeightedGraph& h, bool min_fill) {
  const int n = h.vertex_count();
  std::vector<std::set<Vertex>> adj(static_cast<std::size_t>(n) + 1);
  for (const Edge& e : h.edges()) {
    adj[e.u].insert(e.v);
    adj[e.v].insert(e.u);
  }
  std::vector<char> gone(static_cast<std::size_t>(n) + 1, 0);
  std::vector<Vertex> order;
  order.reserve(n);

  auto fill_in = [&](Vertex v) {
    long missing = 0;
    for (auto a = adj[v].begin(); a != adj[v].end(); ++a) {
      for (auto b = std::next(a); b != adj[v].end(); ++b) {
        if (!adj[*a].count(*b)) ++missing;
      }
    }
    return missing;
  };

  for (int step = 0; step < n; ++step) {
    Vertex best = 0;
    long best_score = 0;
    for (Vertex v = 1; v <= n; ++v) {
      if (gone[v]) continue;
      const long score = min_fill ? fill_in(v) : static_cast<long>(adj[v].size());
      if (best == 0 || score < best_score) {
        best = v;
        best_score = score;
      }
    }
    order.push_back(best);
    gone[best] = 1;
    const std::set<Vertex> nbrs = adj[best];
    for (Vertex a : nbrs) {
      adj[a].erase(best);
      for (Vertex b : nbrs) {
        if (a != b) adj[a].insert(b);
      }
    }
    adj[best].clear();
  }
  return order;
}

// Exact treewidth by branch and bound over elimination orders. A state is the
// set S of eliminated vertices; eliminating v next creates a bag of size
// |Q(S, v)| + 1 where Q(S, v) are the remaining vertices reachable from v
// through S.
class ExactTreewidth {
 public:
  explicit ExactTreewidth(const UndirectedWeightedGraph& h) : n_(h.vertex_count()), adj_(n_, 0) {
    for (const Edge& e : h.edges()) {
      adj_[e.u - 1] |= 1u << (e.v - 1);
      adj_[e.v - 1] |= 1u << (e.u - 1);
    }
    all_ = n_ == 32 ? ~0u : ((1u << n_) - 1);
  }

  std::vector<Vertex> solve(std::vector<Vertex> initial_order, int initial_width) {
    best_width_ = initial_width;
    best_order_ = std::move(initial_order);
    path_.clear();
    search(0, -1);
    return best_order_;
  }

 private:
  int q_size(std::uint32_t eliminated, int v) const {
    std::uint32_t visited = 1u << v;
    std::uint32_t frontier = 1u << v;
    std::uint32_t reach = 0;
    while (frontier) {
      const int x = std::countr_zero(frontier);
      frontier &= frontier - 1;
      const std::uint32_t nb = adj_[x] & ~visited;
      visited |= nb;
      reach |= nb & ~eliminated;
      frontier |= nb & eliminated;
    }
    return std::popcount(reach);
  }

  void search(std::uint32_t eliminated, int current) {
    const std::uint32_t remaining = all_ & ~eliminated;
    const int left = std::popcount(remaining);
    if (std::max(current, left - 1) < best_width_) {
      // Any completion costs at most left - 1.
      best_width_ = std::max(current, left - 1);
      best_order_ = path_;
      for (int v = 0; v < n_; ++v) {
        if (remaining & (1u << v)) best_order_.push_back(v + 1);
      }
    }
    if (left <= 1 || current >= best_width_) {
      return;
    }
    auto [it, inserted] = seen_.try_emplace(eliminated, current);
    if (!inserted) {
      if (it->second <= current) return;
      it->second = current;
    }
    for (int v = 0; v < n_; ++v) {
      if (!(remaining & (1u << v))) continue;
      const int next = std::max(current, q_size(eliminated, v));
      if (next >= best_width_) continue;
      path_.push_back(v + 1);
      search(eliminated | (1u << v), next);
      path_.pop_back();
    }
  }

  int n_;
  std::vector<std::uint32_t> adj_;
  std::uint32_t all_ = 0;
  int best_width_ = 0;
  std::vector<Vertex> best_order_;
  std::vector<Vertex> path_;
  std::unordered_map<std::uint32_t, int> seen_;
};

}  // namespace

TreeDecomposition build_decomposition(const WeightedDigraph& g, DecompositionStrategy strategy) {
  const UndirectedWeightedGraph h = underlying_graph(g);
  switch (strategy) {
    case DecompositionStrategy::MinDegree:
      return decomposition_from_order(h, greedy_order(h, false));
    case DecompositionStrategy::MinFill:
      return decomposition_from_order(h, greedy_order(h, true));
    case DecompositionStrategy::ExactSmall: {
      if (g.vertex_count() > kExactTreewidthMaxVertices) {
        throw LimitExceeded("exact-small decomposition supports at most " + std::to_string(kExactTreewidthMaxVertices) +
                            " vertices, graph has " + std::to_string(g.vertex_count()));
      }
      std::vector<Vertex> order = greedy_order(h, true);
      const int heuristic = width(decomposition_from_order(h, order));
      ExactTreewidth exact(h);
      return decomposition_from_order(h, exact.solve(std::move(order), heuristic));
    }
  }
  throw PreconditionError("unknown decomposition strategy");
}

RootedTree::RootedTree(const TreeDecomposition& d)
    : root_(d.root), parent_(d.bags.size(), -1), children_(d.bags.size()), depth_(d.bags.size(), 0) {
  const auto adj = tree_adjacency(d);
  std::vector<char> seen(d.bags.size(), 0);
  std::queue<int> queue;
  queue.push(root_);
  seen[root_] = 1;
  while (!queue.empty()) {
    const int i = queue.front();
    queue.pop();
    order_.push_back(i);
    for (int j : adj[i]) {
      if (seen[j]) continue;
      seen[j] = 1;
      parent_[j] = i;
      depth_[j] = depth_[i] + 1;
      children_[i].push_back(j);
      queue.push(j);
    }
  }
  if (order_.size() != d.bags.size()) throw PreconditionError("bag tree is not connected");
}

VertexSet extended_bag(const WeightedDigraph& g, const VertexSet& bag) {
  VertexSet out = bag;
  for (Vertex v : bag) {
    for (const Incidence& inc : g.in_arcs(v)) out.push_back(inc.other);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int deciding_bag(const TreeDecomposition& d, const WeightedDigraph& g, Vertex v, DecidingMode mode) {
  const RootedTree tree(d);
  for (int i : tree.preorder()) {
    const VertexSet relevant = mode == DecidingMode::BagOnly ? d.bags[i] : extended_bag(g, d.bags[i]);
    if (std::binary_search(relevant.begin(), relevant.end(), v)) return i;
  }
  throw PreconditionError("vertex " + std::to_string(v) + " is in no bag");
}

}  // namespace wic
