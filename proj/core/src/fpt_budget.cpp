#include "wic/fpt_budget.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_map>

#include "wic/errors.hpp"

namespace wic {

namespace {

constexpr int kInfeasible = 1 << 28;

struct ChargeArc {
  int tail = 0;  // local indices into X_i
  int head = 0;
  std::int64_t units = 0;
  std::size_t arc = 0;
};

struct ChildLink {
  int child = 0;
  std::vector<int> shared;      // local indices in X_p of X_p ∩ X_child, ascending by vertex
  std::vector<char> split;      // parallel to `shared`: budget is divided with later children
  std::vector<int> relevant;    // local indices in X_p held by this child or a later one
};

struct BagData {
  VertexSet bag;
  std::vector<int> from_parent;  // local indices of X_i ∩ X_p
  std::vector<int> fresh;        // local indices of X_i \ X_p
  std::vector<std::vector<ChargeArc>> charges;  // per local index: charge arcs completed when it is colored
  std::vector<ChildLink> links;
};

struct ColorEntry {
  int value = kInfeasible;
  std::string choice;
};

struct DistributeEntry {
  int value = kInfeasible;
  std::vector<int> split;  // budget sent to the child, parallel to ChildLink::shared
};

void append_budget(std::string& key, int units) {
  key.push_back(static_cast<char>(units & 0xff));
  key.push_back(static_cast<char>((units >> 8) & 0xff));
}

}  // namespace

std::optional<FixedPointWeight> to_fixed_point(const Weight& w, int bits) {
  if (bits < 1 || bits > kMaxPrecisionBits) {
    throw PreconditionError("precision must be between 1 and " + std::to_string(kMaxPrecisionBits) + " bits");
  }
  const std::int64_t scale = std::int64_t{1} << bits;
  if (scale % w.value().den() != 0) return std::nullopt;
  return FixedPointWeight{w.value().num() * (scale / w.value().den()), bits};
}

std::optional<std::size_t> check_fixed_point(const WeightedDigraph& g, int bits) {
  for (std::size_t i = 0; i < g.arc_count(); ++i) {
    if (!to_fixed_point(g.arc(i).weight, bits)) return i;
  }
  if (bits < 1 || bits > kMaxPrecisionBits) {
    throw PreconditionError("precision must be between 1 and " + std::to_string(kMaxPrecisionBits) + " bits");
  }
  return std::nullopt;
}

std::optional<int> minimal_precision(const WeightedDigraph& g) {
  for (int bits = 1; bits <= kMaxPrecisionBits; ++bits) {
    if (!check_fixed_point(g, bits)) return bits;
  }
  return std::nullopt;
}

struct BudgetSolver::Impl {
  Impl(const WeightedDigraph& graph, const TreeDecomposition& decomposition, int precision, BudgetOptions opts)
      : g(graph), d(decomposition), tree(decomposition), bits(precision), options(opts) {
    max_color = width(d) + 1;
    if (max_color > 120) throw LimitExceeded("decomposition width too large for the budget DP");
    initial_budget = (1 << bits) - 1;

    bags.resize(d.bag_count());
    for (int i = 0; i < d.bag_count(); ++i) {
      BagData& b = bags[i];
      b.bag = d.bags[i];
      const int p = tree.parent(i);
      auto in_parent = [&](Vertex v) {
        return p >= 0 && std::binary_search(d.bags[p].begin(), d.bags[p].end(), v);
      };
      for (int l = 0; l < static_cast<int>(b.bag.size()); ++l) {
        (in_parent(b.bag[l]) ? b.from_parent : b.fresh).push_back(l);
      }
      stats.max_key_width = std::max(stats.max_key_width, static_cast<int>(b.from_parent.size()));

      // Position of each local vertex in the coloring order: inherited vertices
      // first, then fresh ones ascending.
      std::vector<int> rank(b.bag.size(), -1);
      for (std::size_t t = 0; t < b.fresh.size(); ++t) rank[b.fresh[t]] = static_cast<int>(t);
      b.charges.assign(b.bag.size(), {});
      for (int lv = 0; lv < static_cast<int>(b.bag.size()); ++lv) {
        for (const Incidence& inc : g.in_arcs(b.bag[lv])) {
          auto it = std::lower_bound(b.bag.begin(), b.bag.end(), inc.other);
          if (it == b.bag.end() || *it != inc.other) continue;
          const int lu = static_cast<int>(it - b.bag.begin());
          if (in_parent(b.bag[lu]) && in_parent(b.bag[lv])) continue;
          const ChargeArc charge{lu, lv, to_fixed_point(g.arc(inc.arc).weight, bits)->units, inc.arc};
          // Charged when the later of its two endpoints gets its color.
          b.charges[rank[lu] > rank[lv] ? lu : lv].push_back(charge);
        }
      }
    }

    for (int p = 0; p < d.bag_count(); ++p) {
      BagData& b = bags[p];
      const auto& children = tree.children(p);
      const int count = static_cast<int>(children.size());
      std::vector<std::vector<char>> held(count, std::vector<char>(b.bag.size(), 0));
      for (int t = 0; t < count; ++t) {
        for (int l = 0; l < static_cast<int>(b.bag.size()); ++l) {
          held[t][l] = std::binary_search(d.bags[children[t]].begin(), d.bags[children[t]].end(), b.bag[l]);
        }
      }
      for (int t = 0; t < count; ++t) {
        ChildLink link;
        link.child = children[t];
        for (int l = 0; l < static_cast<int>(b.bag.size()); ++l) {
          bool later = false;
          for (int u = t + 1; u < count; ++u) later = later || held[u][l];
          if (held[t][l]) {
            link.shared.push_back(l);
            link.split.push_back(options.exhaustive_splits || later);
          }
          if (held[t][l] || later) link.relevant.push_back(l);
        }
        stats.max_key_width = std::max(stats.max_key_width, static_cast<int>(link.relevant.size()));
        b.links.push_back(std::move(link));
      }
    }
    color_memo.resize(d.bag_count());
    distribute_memo.resize(d.bag_count());
  }

  static std::string color_key(const std::vector<int>& colors, const std::vector<int>& budgets, const ChildLink& link) {
    // link.shared lists X_p ∩ X_child in vertex order, matching child.from_parent.
    std::string key;
    for (int l : link.shared) key.push_back(static_cast<char>(colors[l]));
    for (std::size_t s = 0; s < link.shared.size(); ++s) append_budget(key, budgets[s]);
    return key;
  }

  // ---- Color -------------------------------------------------------------

  int color(int i, const std::string& key) {
    auto it = color_memo[i].find(key);
    if (it != color_memo[i].end()) {
      ++stats.hits;
      return it->second.value;
    }
    const BagData& b = bags[i];
    std::vector<int> colors(b.bag.size(), 0);
    std::vector<int> budget(b.bag.size(), initial_budget);
    const std::size_t k = b.from_parent.size();
    int highest = 0;
    for (std::size_t t = 0; t < k; ++t) {
      const int l = b.from_parent[t];
      colors[l] = static_cast<unsigned char>(key[t]);
      budget[l] = static_cast<unsigned char>(key[k + 2 * t]) | (static_cast<unsigned char>(key[k + 2 * t + 1]) << 8);
      highest = std::max(highest, colors[l]);
    }
    ColorEntry entry;
    enumerate(i, b, colors, budget, 0, highest, entry);
    const int value = entry.value;
    color_memo[i].emplace(key, std::move(entry));
    ++stats.color_entries;
    return value;
  }

  void enumerate(int i, const BagData& b, std::vector<int>& colors, std::vector<int>& budget, std::size_t t,
                 int highest, ColorEntry& entry) {
    if (highest >= entry.value) return;
    if (t == b.fresh.size()) {
      const int rest = distribute(i, colors, budget, 0);
      const int value = std::max(highest, rest);
      if (value < entry.value) {
        entry.value = value;
        entry.choice.assign(colors.begin(), colors.end());
      }
      return;
    }
    const int l = b.fresh[t];
    for (int c = 1; c <= max_color && std::max(highest, c) < entry.value; ++c) {
      colors[l] = c;
      bool ok = true;
      for (const ChargeArc& a : b.charges[l]) {
        if (colors[a.tail] == colors[a.head]) {
          budget[a.head] -= static_cast<int>(a.units);
          if (budget[a.head] < 0) ok = false;
        }
      }
      if (ok) enumerate(i, b, colors, budget, t + 1, std::max(highest, c), entry);
      for (const ChargeArc& a : b.charges[l]) {
        if (colors[a.tail] == colors[a.head]) budget[a.head] += static_cast<int>(a.units);
      }
      colors[l] = 0;
    }
  }

  // ---- Distribute --------------------------------------------------------

  std::string distribute_key(const ChildLink& link, int t, const std::vector<int>& colors,
                             const std::vector<int>& budget) const {
    std::string key;
    append_budget(key, t);
    for (int l : link.relevant) key.push_back(static_cast<char>(colors[l]));
    for (int l : link.relevant) append_budget(key, budget[l]);
    return key;
  }

  int distribute(int p, const std::vector<int>& colors, const std::vector<int>& budget, int t) {
    const BagData& b = bags[p];
    if (t >= static_cast<int>(b.links.size())) return 0;
    const ChildLink& link = b.links[t];
    const std::string key = distribute_key(link, t, colors, budget);
    auto it = distribute_memo[p].find(key);
    if (it != distribute_memo[p].end()) {
      ++stats.hits;
      return it->second.value;
    }

    DistributeEntry entry;
    std::vector<int> send(link.shared.size(), 0);
    for (std::size_t s = 0; s < link.shared.size(); ++s) send[s] = budget[link.shared[s]];
    std::vector<int> remaining = budget;
    split(p, link, t, colors, budget, remaining, send, 0, entry);

    const int value = entry.value;
    distribute_memo[p].emplace(key, std::move(entry));
    ++stats.distribute_entries;
    return value;
  }

  // Enumerates the budget sent to the child for each split vertex, from the
  // full remaining budget down to zero.
  void split(int p, const ChildLink& link, int t, const std::vector<int>& colors, const std::vector<int>& budget,
             std::vector<int>& remaining, std::vector<int>& send, std::size_t s, DistributeEntry& entry) {
    if (s == link.shared.size()) {
      const int child_value = color(link.child, color_key(colors, send, link));
      if (child_value >= entry.value) return;
      const int rest = distribute(p, colors, remaining, t + 1);
      const int value = std::max(child_value, rest);
      if (value < entry.value) {
        entry.value = value;
        entry.split = send;
      }
      return;
    }
    const int l = link.shared[s];
    if (!link.split[s]) {
      send[s] = budget[l];
      remaining[l] = 0;
      split(p, link, t, colors, budget, remaining, send, s + 1, entry);
      remaining[l] = budget[l];
      return;
    }
    for (int give = budget[l]; give >= 0; --give) {
      send[s] = give;
      remaining[l] = budget[l] - give;
      split(p, link, t, colors, budget, remaining, send, s + 1, entry);
    }
    remaining[l] = budget[l];
  }

  // ---- Witness replay ----------------------------------------------------

  void replay_color(int i, const std::string& key, Coloring& out) {
    auto it = color_memo[i].find(key);
    if (it == color_memo[i].end() || it->second.value >= kInfeasible) {
      throw Error("budget DP: missing Color entry during witness reconstruction");
    }
    const BagData& b = bags[i];
    std::vector<int> colors(it->second.choice.begin(), it->second.choice.end());
    std::vector<int> budget(b.bag.size(), initial_budget);
    const std::size_t k = b.from_parent.size();
    for (std::size_t t = 0; t < k; ++t) {
      const int l = b.from_parent[t];
      budget[l] = static_cast<unsigned char>(key[k + 2 * t]) | (static_cast<unsigned char>(key[k + 2 * t + 1]) << 8);
    }
    for (int l = 0; l < static_cast<int>(b.bag.size()); ++l) {
      const Vertex v = b.bag[l];
      if (!out.assigned(v)) {
        out.assign(v, colors[l]);
      } else if (out[v] != colors[l]) {
        throw Error("budget DP: vertex " + std::to_string(v) + " recolored at bag " + std::to_string(i));
      }
      for (const ChargeArc& a : b.charges[l]) {
        if (colors[a.tail] == colors[a.head]) {
          budget[a.head] -= static_cast<int>(a.units);
          ++charges[a.arc];
        }
      }
    }
    for (int units : budget) {
      if (units < 0) throw Error("budget DP: accepted coloring left a negative budget");
    }
    replay_distribute(i, colors, budget, 0, out);
  }

  void replay_distribute(int p, const std::vector<int>& colors, const std::vector<int>& budget, int t,
                         Coloring& out) {
    const BagData& b = bags[p];
    if (t >= static_cast<int>(b.links.size())) return;
    const ChildLink& link = b.links[t];
    auto it = distribute_memo[p].find(distribute_key(link, t, colors, budget));
    if (it == distribute_memo[p].end() || it->second.value >= kInfeasible) {
      throw Error("budget DP: missing Distribute entry during witness reconstruction");
    }
    const std::vector<int> send = it->second.split;
    std::vector<int> remaining = budget;
    for (std::size_t s = 0; s < link.shared.size(); ++s) {
      const int l = link.shared[s];
      if (send[s] < 0 || send[s] > budget[l]) throw Error("budget DP: split exceeds the available budget");
      remaining[l] = budget[l] - send[s];
    }
    replay_color(link.child, color_key(colors, send, link), out);
    replay_distribute(p, colors, remaining, t + 1, out);
  }

  const WeightedDigraph& g;
  TreeDecomposition d;
  RootedTree tree;
  int bits;
  BudgetOptions options;
  int max_color = 1;
  int initial_budget = 0;
  std::vector<BagData> bags;
  std::vector<std::unordered_map<std::string, ColorEntry>> color_memo;
  std::vector<std::unordered_map<std::string, DistributeEntry>> distribute_memo;
  std::vector<int> charges;
  BudgetStats stats;
};

namespace {

const TreeDecomposition& validated(const WeightedDigraph& g, const TreeDecomposition& d, int bits) {
  if (auto violation = validate_decomposition(g, d)) {
    throw PreconditionError("invalid decomposition: " + violation->to_string());
  }
  if (auto bad = check_fixed_point(g, bits)) {
    const Arc& a = g.arc(*bad);
    throw PreconditionError("arc (" + std::to_string(a.tail) + "," + std::to_string(a.head) + ") weight " +
                            a.weight.value().to_string() + " is not a multiple of 2^-" + std::to_string(bits));
  }
  return d;
}

}  // namespace

BudgetSolver::BudgetSolver(const WeightedDigraph& g, const TreeDecomposition& d, int bits, BudgetOptions options)
    : impl_(std::make_unique<Impl>(g, validated(g, d, bits), bits, options)) {}

BudgetSolver::~BudgetSolver() = default;

const BudgetStats& BudgetSolver::stats() const { return impl_->stats; }

const std::vector<int>& BudgetSolver::charge_counts() const { return impl_->charges; }

SolveResult BudgetSolver::solve() {
  Impl& s = *impl_;
  if (s.g.vertex_count() == 0) return SolveResult{0, Coloring(0)};
  const int value = s.color(s.tree.root(), std::string());
  if (value >= kInfeasible) throw Error("budget DP found no coloring within width+1 colors");

  SolveResult result{value, Coloring(s.g.vertex_count())};
  s.charges.assign(s.g.arc_count(), 0);
  s.replay_color(s.tree.root(), std::string(), result.witness);
  for (std::size_t i = 0; i < s.g.arc_count(); ++i) {
    const Arc& a = s.g.arc(i);
    const int expected = result.witness[a.tail] == result.witness[a.head] ? 1 : 0;
    if (s.charges[i] != expected) {
      throw Error("budget DP: arc (" + std::to_string(a.tail) + "," + std::to_string(a.head) + ") charged " +
                  std::to_string(s.charges[i]) + " times");
    }
  }
  if (!result.witness.is_total() || !is_valid_coloring(s.g, result.witness) ||
      result.witness.max_color() != value) {
    throw Error("budget DP produced an inconsistent witness");
  }
  return result;
}

double BudgetSolver::color_entry_cap() const {
  const double k1 = impl_->max_color;
  const double n = std::max(impl_->g.vertex_count(), impl_->d.bag_count());
  return n * std::pow(k1, k1) * std::pow(2.0, impl_->bits * k1);
}

double BudgetSolver::distribute_entry_cap() const {
  const double n = std::max(impl_->g.vertex_count(), impl_->d.bag_count());
  return n * color_entry_cap();
}

SolveResult solve_fpt_budget(const WeightedDigraph& g, const TreeDecomposition& d, std::optional<int> bits,
                             BudgetStats* stats) {
  if (!bits) {
    bits = minimal_precision(g);
    if (!bits) throw PreconditionError("weights are not dyadic with at most " + std::to_string(kMaxPrecisionBits) + " bits");
  }
  BudgetSolver solver(g, d, *bits);
  SolveResult result = solver.solve();
  if (stats) *stats = solver.stats();
  return result;
}

}  // namespace wic
