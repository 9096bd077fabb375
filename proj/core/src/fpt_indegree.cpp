#include "wic/fpt_indegree.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_map>

#include "wic/errors.hpp"

namespace wic {

namespace {

constexpr int kInfeasible = 1 << 28;

struct InArc {
  int tail = 0;  // local index into V_i
  std::int64_t units = 0;
};

struct BagData {
  VertexSet bag;       // X_i
  VertexSet extended;  // V_i
  std::vector<char> in_bag;              // per local index: member of X_i
  std::vector<std::vector<InArc>> in;    // per local index in X_i: in-arcs
  std::vector<std::vector<std::pair<int, std::int64_t>>> out;  // per local index: arcs into X_i
  std::vector<int> shared;               // local indices of V_i ∩ V_p
  std::vector<int> free;                 // local indices of V_i \ V_p
  std::vector<std::vector<int>> child_key;  // per child: local indices of V_c ∩ V_i, in V_c order
};

struct Entry {
  int value = kInfeasible;
  std::string choice;  // color of each vertex of V_i
};

}  // namespace

struct IndegreeSolver::Impl {
  Impl(const WeightedDigraph& graph, const TreeDecomposition& decomposition)
      : g(graph), d(decomposition), tree(decomposition), units(unit_weights(graph)) {
    max_color = width(d) + 1;
    if (max_color > 120) throw LimitExceeded("decomposition width too large for the indegree DP");
    bags.resize(d.bag_count());
    for (int i = 0; i < d.bag_count(); ++i) {
      BagData& b = bags[i];
      b.bag = d.bags[i];
      b.extended = extended_bag(g, b.bag);
      const int size = static_cast<int>(b.extended.size());
      b.in_bag.assign(size, 0);
      b.in.assign(size, {});
      b.out.assign(size, {});
      auto local = [&](Vertex v) {
        return static_cast<int>(std::lower_bound(b.extended.begin(), b.extended.end(), v) - b.extended.begin());
      };
      for (Vertex v : b.bag) b.in_bag[local(v)] = 1;
      for (Vertex v : b.bag) {
        const int lv = local(v);
        for (const Incidence& inc : g.in_arcs(v)) {
          const int lu = local(inc.other);
          b.in[lv].push_back({lu, units.units[inc.arc]});
          b.out[lu].emplace_back(lv, units.units[inc.arc]);
        }
      }
    }
    for (int i = 0; i < d.bag_count(); ++i) {
      BagData& b = bags[i];
      const int p = tree.parent(i);
      for (int l = 0; l < static_cast<int>(b.extended.size()); ++l) {
        const bool in_parent =
            p >= 0 && std::binary_search(bags[p].extended.begin(), bags[p].extended.end(), b.extended[l]);
        (in_parent ? b.shared : b.free).push_back(l);
      }
      stats.max_key_width = std::max(stats.max_key_width, static_cast<int>(b.shared.size()));
    }
    for (int i = 0; i < d.bag_count(); ++i) {
      for (int c : tree.children(i)) {
        std::vector<int> key;
        for (int l : bags[c].shared) {
          const Vertex v = bags[c].extended[l];
          key.push_back(static_cast<int>(std::lower_bound(bags[i].extended.begin(), bags[i].extended.end(), v) -
                                         bags[i].extended.begin()));
        }
        bags[i].child_key.push_back(std::move(key));
      }
    }
    memo.resize(d.bag_count());
  }

  // Adds the same-color weight that vertex `l` (just colored) contributes and
  // receives. Returns false when some vertex of X_i reaches the threshold.
  bool charge(const BagData& b, const std::string& colors, std::vector<std::int64_t>& spent, int l, int sign) const {
    bool ok = true;
    const char c = colors[l];
    if (b.in_bag[l]) {
      for (const InArc& a : b.in[l]) {
        if (colors[a.tail] == c) spent[l] += sign * a.units;
      }
      if (spent[l] >= units.denominator) ok = false;
    }
    for (auto [target, w] : b.out[l]) {
      if (target != l && colors[target] == c) {
        spent[target] += sign * w;
        if (spent[target] >= units.denominator) ok = false;
      }
    }
    return ok;
  }

  int color(int i, const std::string& key, bool memoize) {
    if (memoize) {
      auto it = memo[i].find(key);
      if (it != memo[i].end()) {
        ++stats.hits;
        return it->second.value;
      }
    }
    const BagData& b = bags[i];
    std::string colors(b.extended.size(), '\0');
    for (std::size_t t = 0; t < b.shared.size(); ++t) colors[b.shared[t]] = key[t];

    Entry entry;
    std::vector<std::int64_t> spent(b.extended.size(), 0);
    bool ok = true;
    int highest = 0;
    for (int l : b.shared) {
      highest = std::max(highest, static_cast<int>(colors[l]));
      if (b.in_bag[l]) {
        for (const InArc& a : b.in[l]) {
          if (colors[a.tail] != '\0' && colors[a.tail] == colors[l]) spent[l] += a.units;
        }
        if (spent[l] >= units.denominator) ok = false;
      }
    }
    if (ok) enumerate(i, b, colors, spent, 0, highest, entry, memoize);

    if (memoize) {
      const int value = entry.value;
      memo[i].emplace(key, std::move(entry));
      ++stats.entries;
      return value;
    }
    return entry.value;
  }

  void enumerate(int i, const BagData& b, std::string& colors, std::vector<std::int64_t>& spent, std::size_t t,
                 int highest, Entry& entry, bool memoize) {
    if (highest >= entry.value) return;
    if (t == b.free.size()) {
      int value = highest;
      const auto& children = tree.children(i);
      for (std::size_t j = 0; j < children.size() && value < entry.value; ++j) {
        std::string child_key;
        child_key.reserve(b.child_key[j].size());
        for (int l : b.child_key[j]) child_key.push_back(colors[l]);
        value = std::max(value, color(children[j], child_key, memoize));
      }
      if (value < entry.value) {
        entry.value = value;
        entry.choice = colors;
      }
      return;
    }
    const int l = b.free[t];
    for (int c = 1; c <= max_color && std::max(highest, c) < entry.value; ++c) {
      colors[l] = static_cast<char>(c);
      if (charge(b, colors, spent, l, +1)) {
        enumerate(i, b, colors, spent, t + 1, std::max(highest, c), entry, memoize);
      }
      charge(b, colors, spent, l, -1);
      colors[l] = '\0';
    }
  }

  Coloring replay() const {
    Coloring out(g.vertex_count());
    struct Frame {
      int bag;
      std::string key;
    };
    std::vector<Frame> stack{{tree.root(), std::string()}};
    while (!stack.empty()) {
      Frame frame = std::move(stack.back());
      stack.pop_back();
      const BagData& b = bags[frame.bag];
      auto it = memo[frame.bag].find(frame.key);
      if (it == memo[frame.bag].end() || it->second.value >= kInfeasible) {
        throw Error("indegree DP: missing memo entry during witness reconstruction");
      }
      const std::string& colors = it->second.choice;
      for (std::size_t l = 0; l < b.extended.size(); ++l) {
        const Vertex v = b.extended[l];
        if (!out.assigned(v)) {
          if (deciding_bag(d, g, v, DecidingMode::BagPlusInNeighbors) != frame.bag) {
            throw Error("indegree DP: vertex " + std::to_string(v) + " first colored outside its deciding bag");
          }
          out.assign(v, colors[l]);
        } else if (out[v] != colors[l]) {
          throw Error("indegree DP: vertex " + std::to_string(v) + " recolored at bag " + std::to_string(frame.bag));
        }
      }
      const auto& children = tree.children(frame.bag);
      for (std::size_t j = children.size(); j-- > 0;) {
        std::string child_key;
        for (int l : b.child_key[j]) child_key.push_back(colors[l]);
        stack.push_back({children[j], std::move(child_key)});
      }
    }
    return out;
  }

  const WeightedDigraph& g;
  TreeDecomposition d;
  RootedTree tree;
  UnitWeights units;
  int max_color = 1;
  std::vector<BagData> bags;
  std::vector<std::unordered_map<std::string, Entry>> memo;
  MemoStats stats;
};

namespace {

const TreeDecomposition& validated(const WeightedDigraph& g, const TreeDecomposition& d) {
  if (auto violation = validate_decomposition(g, d)) {
    throw PreconditionError("invalid decomposition: " + violation->to_string());
  }
  return d;
}

}  // namespace

IndegreeSolver::IndegreeSolver(const WeightedDigraph& g, const TreeDecomposition& d)
    : impl_(std::make_unique<Impl>(g, validated(g, d))) {}

IndegreeSolver::~IndegreeSolver() = default;

const MemoStats& IndegreeSolver::stats() const { return impl_->stats; }

SolveResult IndegreeSolver::solve() {
  Impl& s = *impl_;
  if (s.g.vertex_count() == 0) return SolveResult{0, Coloring(0)};
  const int value = s.color(s.tree.root(), std::string(), true);
  if (value >= kInfeasible) throw Error("indegree DP found no coloring within width+1 colors");
  SolveResult result{value, s.replay()};
  if (!is_valid_coloring(s.g, result.witness) || result.witness.max_color() != value) {
    throw Error("indegree DP produced an inconsistent witness");
  }
  return result;
}

int IndegreeSolver::solve_unmemoized() {
  Impl& s = *impl_;
  if (s.g.vertex_count() == 0) return 0;
  return s.color(s.tree.root(), std::string(), false);
}

double IndegreeSolver::structural_entry_cap() const {
  double total = 0;
  for (const auto& b : impl_->bags) total += std::pow(impl_->max_color, static_cast<double>(b.shared.size()));
  return total;
}

double IndegreeSolver::parameter_entry_cap() const {
  const double k1 = impl_->max_color;
  const double n = std::max(1, impl_->g.vertex_count());
  return n * std::pow(k1, k1 * (impl_->g.max_indegree() + 1));
}

SolveResult solve_fpt_indegree(const WeightedDigraph& g, const TreeDecomposition& d, MemoStats* stats) {
  IndegreeSolver solver(g, d);
  SolveResult result = solver.solve();
  if (stats) *stats = solver.stats();
  return result;
}

}  // namespace wic
