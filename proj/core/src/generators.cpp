#include "wic/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "wic/errors.hpp"

namespace wic {

namespace {

// Explicit mappings from the raw engine output keep generated instances
// identical across standard libraries (the std distributions are not
// specified bit for bit).
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  bool chance(double p) { return unit() < p; }
  /// Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(engine_() % span);
  }

 private:
  std::mt19937_64 engine_;
};

void check_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) throw PreconditionError(std::string(what) + " must lie in [0, 1]");
}

}  // namespace

WeightedDigraph reduce_defective(const UndirectedWeightedGraph& h, int d) {
  if (d < 0) throw PreconditionError("defect d must be nonnegative, got " + std::to_string(d));
  const Weight w(Rational(1, d + 1));
  std::vector<Arc> arcs;
  arcs.reserve(2 * h.edge_count());
  for (const Edge& e : h.edges()) {
    arcs.push_back({e.u, e.v, w});
    arcs.push_back({e.v, e.u, w});
  }
  return WeightedDigraph(h.vertex_count(), std::move(arcs));
}

WeightedDigraph complete_embed(const WeightedDigraph& g) {
  const int n = g.vertex_count();
  std::vector<Arc> arcs(g.arcs().begin(), g.arcs().end());
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = 1; v <= n; ++v) {
      if (u != v && !g.has_arc(u, v)) arcs.push_back({u, v, Weight(Rational(0))});
    }
  }
  return WeightedDigraph(n, std::move(arcs));
}

PartitionInstance make_partition_instance(std::vector<std::int64_t> values) {
  if (values.empty()) throw PreconditionError("partition instance needs a nonempty multiset");
  PartitionInstance instance;
  for (std::int64_t x : values) {
    if (x < 1) throw PreconditionError("partition values must be positive, got " + std::to_string(x));
    instance.sum = checked::add(instance.sum, x);
  }
  const auto size = static_cast<std::int64_t>(values.size());
  instance.epsilon = Rational(1, checked::mul(checked::mul(2, size), instance.sum));
  instance.values = std::move(values);
  return instance;
}

PartitionGadget partition_instance(const std::vector<std::int64_t>& values) {
  PartitionInstance instance = make_partition_instance(values);
  const int count = static_cast<int>(instance.values.size());
  const Vertex a = 1;
  const Vertex b = 2;
  std::vector<Edge> edges{{a, b, Weight(Rational(1))}};
  TreeDecomposition d;
  for (int i = 0; i < count; ++i) {
    const Vertex v = i + 3;
    Rational w = Rational(2 * instance.values[i], instance.sum) - instance.epsilon / Rational(count);
    if (w > Rational(1)) w = Rational(1);
    edges.push_back({a, v, Weight(w)});
    edges.push_back({b, v, Weight(w)});
    d.bags.push_back({a, b, v});
    if (i > 0) d.tree_edges.emplace_back(i - 1, i);
  }
  UndirectedWeightedGraph h(count + 2, std::move(edges));
  return PartitionGadget{std::move(instance), embed_undirected(h), std::move(d)};
}

bool is_partitionable(const std::vector<std::int64_t>& values) {
  const std::int64_t total = std::accumulate(values.begin(), values.end(), std::int64_t{0});
  if (total % 2 != 0) return false;
  if (values.size() >= 63) throw LimitExceeded("subset enumeration limited to 62 values");
  const std::uint64_t subsets = std::uint64_t{1} << values.size();
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    std::int64_t part = 0;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (mask >> i & 1) part += values[i];
    }
    if (2 * part == total) return true;
  }
  return false;
}

WeightedDigraph random_instance(int n, double arc_probability, const WeightModel& model, std::uint64_t seed) {
  if (n < 0) throw PreconditionError("vertex count must be nonnegative");
  check_probability(arc_probability, "arc probability");
  if (const auto* u = std::get_if<UniformRational>(&model); u && u->max_denominator < 1) {
    throw PreconditionError("uniform-rational model needs max_denominator >= 1");
  }
  if (const auto* dy = std::get_if<Dyadic>(&model); dy && (dy->bits < 1 || dy->bits > 30)) {
    throw PreconditionError("dyadic model needs 1 <= bits <= 30");
  }
  Draw draw(seed);
  std::vector<Arc> arcs;
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = 1; v <= n; ++v) {
      if (u == v || !draw.chance(arc_probability)) continue;
      Rational w;
      if (const auto* dy = std::get_if<Dyadic>(&model)) {
        const std::int64_t scale = std::int64_t{1} << dy->bits;
        w = Rational(draw.between(1, scale), scale);
      } else {
        const std::int64_t den = draw.between(1, std::get<UniformRational>(model).max_denominator);
        w = Rational(draw.between(0, den), den);
      }
      arcs.push_back({u, v, Weight(w)});
    }
  }
  return WeightedDigraph(n, std::move(arcs));
}

UndirectedWeightedGraph random_subcubic(int n, double edge_probability, double heavy_probability,
                                        std::int64_t max_denominator, std::uint64_t seed) {
  if (n < 0) throw PreconditionError("vertex count must be nonnegative");
  check_probability(edge_probability, "edge probability");
  check_probability(heavy_probability, "heavy-edge probability");
  if (max_denominator < 2) throw PreconditionError("max_denominator must be at least 2");
  Draw draw(seed);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v) pairs.emplace_back(u, v);
  }
  for (std::size_t i = pairs.size(); i > 1; --i) {
    std::swap(pairs[i - 1], pairs[static_cast<std::size_t>(draw.between(0, static_cast<std::int64_t>(i) - 1))]);
  }
  std::vector<int> degree(static_cast<std::size_t>(n) + 1, 0);
  std::vector<char> heavy(static_cast<std::size_t>(n) + 1, 0);
  std::vector<Edge> edges;
  for (auto [u, v] : pairs) {
    if (!draw.chance(edge_probability)) continue;
    if (degree[u] >= 3 || degree[v] >= 3) continue;
    Rational w;
    if (!heavy[u] && !heavy[v] && draw.chance(heavy_probability)) {
      w = Rational(1);
      heavy[u] = heavy[v] = 1;
    } else {
      const std::int64_t den = draw.between(2, max_denominator);
      w = Rational(draw.between(1, den - 1), den);
    }
    ++degree[u];
    ++degree[v];
    edges.push_back({u, v, Weight(w)});
  }
  return UndirectedWeightedGraph(n, std::move(edges));
}

bool is_conjecture_instance(const UndirectedWeightedGraph& h) {
  for (Vertex v = 1; v <= h.vertex_count(); ++v) {
    if (h.degree(v) > 3) return false;
    int heavy = 0;
    for (const Incidence& inc : h.neighbors(v)) {
      if (h.edges()[inc.arc].weight.value() == Rational(1)) ++heavy;
    }
    if (heavy > 1) return false;
  }
  return true;
}

}  // namespace wic
