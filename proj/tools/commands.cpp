#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <future>
#include <map>
#include <sstream>

#include "wic/bounds.hpp"
#include "wic/errors.hpp"
#include "wic/exact.hpp"
#include "wic/fpt_budget.hpp"
#include "wic/fpt_indegree.hpp"
#include "wic/generators.hpp"
#include "wic/io.hpp"

namespace wic::cli {

namespace {

// `auto` prefers the budget solver up to this precision and the indegree
// solver up to this unweighted indegree; otherwise it falls back to exact.
constexpr int kAutoMaxBits = 4;
constexpr int kAutoMaxIndegree = 3;

struct MethodRun {
  std::string method;
  SolveResult result;
  double wall_ms = 0;
  std::vector<std::pair<std::string, std::string>> stats;
};

TreeDecomposition load_or_build(const WeightedDigraph& g, const SolveOptions& o) {
  TreeDecomposition d;
  if (!o.decomposition_path.empty()) {
    d = parse_decomposition(read_file(o.decomposition_path));
  } else if (!o.strategy.empty()) {
    const auto strategy = parse_strategy(o.strategy);
    if (!strategy) throw PreconditionError("unknown decomposition strategy " + o.strategy);
    d = build_decomposition(g, *strategy);
  } else {
    d = build_decomposition(g, g.vertex_count() <= kExactTreewidthMaxVertices ? DecompositionStrategy::ExactSmall
                                                                               : DecompositionStrategy::MinFill);
  }
  if (o.root) {
    if (*o.root < 1 || *o.root > d.bag_count()) throw PreconditionError("--root must name a bag 1.." +
                                                                        std::to_string(d.bag_count()));
    d = root_at(d, *o.root - 1);
  }
  if (auto violation = validate_decomposition(g, d)) {
    throw PreconditionError("invalid decomposition: " + violation->to_string());
  }
  return d;
}

std::string choose_method(const WeightedDigraph& g) {
  const auto bits = minimal_precision(g);
  if (bits && *bits <= kAutoMaxBits) return "fpt-budget";
  if (g.max_indegree() <= kAutoMaxIndegree) return "fpt-indegree";
  return "exact";
}

MethodRun run_method(const std::string& method, const WeightedDigraph& g, const TreeDecomposition* d,
                     const SolveOptions& o) {
  MethodRun run{method, {}, 0, {}};
  const auto start = std::chrono::steady_clock::now();
  if (method == "exact" && d) {
    // A graph of treewidth k needs at most k + 1 colors.
    auto result = exact_chi_w(g, std::max(1, width(*d) + 1), ExactOptions{o.max_vertices});
    if (!result) throw Error("exact search found no coloring within width + 1 colors");
    run.result = std::move(*result);
  } else if (method == "exact") {
    run.result = exact_chi_w(g, ExactOptions{o.max_vertices});
  } else if (method == "fpt-indegree") {
    IndegreeSolver solver(g, *d);
    run.result = solver.solve();
    run.stats = {{"memo_entries", std::to_string(solver.stats().entries)},
                 {"memo_hits", std::to_string(solver.stats().hits)},
                 {"max_key_width", std::to_string(solver.stats().max_key_width)}};
  } else if (method == "fpt-budget") {
    const auto bits = o.bits ? o.bits : minimal_precision(g);
    if (!bits) throw PreconditionError("fpt-budget needs dyadic weights with at most " +
                                       std::to_string(kMaxPrecisionBits) + " bits");
    BudgetSolver solver(g, *d, *bits);
    run.result = solver.solve();
    run.stats = {{"bits", std::to_string(*bits)},
                 {"color_entries", std::to_string(solver.stats().color_entries)},
                 {"distribute_entries", std::to_string(solver.stats().distribute_entries)},
                 {"memo_hits", std::to_string(solver.stats().hits)},
                 {"max_key_width", std::to_string(solver.stats().max_key_width)}};
  } else {
    throw PreconditionError("unknown method " + method);
  }
  run.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (!is_valid_coloring(g, run.result.witness)) throw Error(method + " produced an invalid witness");
  return run;
}

std::string format_ms(double ms) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.3f", ms);
  return buffer;
}

void print_run(const MethodRun& run, const std::string& prefix, bool stats, std::ostream& out) {
  out << prefix << "solver=" << run.method << '\n';
  out << prefix << "chromatic=" << run.result.chromatic << '\n';
  out << prefix << "wall_ms=" << format_ms(run.wall_ms) << '\n';
  if (stats) {
    for (const auto& [key, value] : run.stats) out << prefix << key << '=' << value << '\n';
  }
}

std::string require_out(const GenOptions& o) {
  if (o.out.empty()) throw PreconditionError("gen " + o.kind + " needs --out");
  return o.out;
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    write_file(path, text);
  }
}

}  // namespace

std::string digest(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buffer[17];
  std::snprintf(buffer, sizeof buffer, "%016llx", static_cast<unsigned long long>(h));
  return buffer;
}

int cmd_solve(const SolveOptions& o, std::ostream& out) {
  const WeightedDigraph g = parse_graph(read_file(o.graph_path));
  std::vector<std::string> methods;
  std::vector<std::string> skipped;
  if (o.all_methods) {
    methods = {"exact", "fpt-budget", "fpt-indegree"};
    if (!minimal_precision(g) && !o.bits) {
      methods.erase(methods.begin() + 1);
      skipped.push_back("fpt-budget");
    }
  } else {
    methods = {o.method == "auto" ? choose_method(g) : o.method};
  }
  const bool needs_decomposition =
      std::any_of(methods.begin(), methods.end(), [](const std::string& m) { return m != "exact"; });
  std::optional<TreeDecomposition> d;
  if (needs_decomposition || !o.decomposition_path.empty()) d = load_or_build(g, o);

  std::vector<std::future<MethodRun>> pending;
  for (const std::string& m : methods) {
    pending.push_back(std::async(o.all_methods ? std::launch::async : std::launch::deferred,
                                 [&, m] { return run_method(m, g, d ? &*d : nullptr, o); }));
  }
  std::vector<MethodRun> runs;
  for (auto& f : pending) runs.push_back(f.get());

  out << "instance=" << digest(serialize_graph(g)) << '\n';
  out << "vertices=" << g.vertex_count() << '\n';
  out << "arcs=" << g.arc_count() << '\n';
  if (d) out << "width=" << width(*d) << '\n';
  if (runs.size() == 1) {
    print_run(runs[0], "", o.stats, out);
  } else {
    for (const MethodRun& run : runs) print_run(run, run.method + ".", o.stats, out);
    for (const std::string& m : skipped) out << m << ".skipped=non-dyadic weights\n";
    const bool agree = std::all_of(runs.begin(), runs.end(),
                                   [&](const MethodRun& r) { return r.result.chromatic == runs[0].result.chromatic; });
    out << "agree=" << (agree ? "yes" : "no") << '\n';
    if (!agree) throw Error("solvers disagree");
  }
  if (!o.out.empty()) {
    const Coloring& witness = runs[0].result.witness;
    if (!is_valid_coloring(g, witness)) throw Error("refusing to write an invalid witness");
    write_file(o.out, serialize_coloring(witness));
    out << "witness=" << o.out << '\n';
  }
  if (o.stats) {
    std::istringstream bounds(compute_bounds(g, d ? &*d : nullptr).to_string());
    for (std::string line; std::getline(bounds, line);) out << "bounds." << line << '\n';
  }
  return kOk;
}

int cmd_bounds(const std::string& graph_path, const std::string& decomposition_path, std::ostream& out) {
  const WeightedDigraph g = parse_graph(read_file(graph_path));
  std::optional<TreeDecomposition> d;
  if (!decomposition_path.empty()) {
    d = parse_decomposition(read_file(decomposition_path));
    if (auto violation = validate_decomposition(g, *d)) {
      throw PreconditionError("invalid decomposition: " + violation->to_string());
    }
  }
  out << compute_bounds(g, d ? &*d : nullptr).to_string();
  return kOk;
}

int cmd_gen(const GenOptions& o, std::ostream& out) {
  if (o.kind == "defective") {
    const UndirectedWeightedGraph h = parse_undirected(read_file(o.input));
    emit(o.out, serialize_graph(reduce_defective(h, o.d)), out);
  } else if (o.kind == "complete-embed") {
    emit(o.out, serialize_graph(complete_embed(parse_graph(read_file(o.input)))), out);
  } else if (o.kind == "partition") {
    const std::string prefix = require_out(o);
    const PartitionGadget gadget = partition_instance(o.values);
    write_file(prefix + ".wig", serialize_graph(gadget.graph));
    write_file(prefix + ".td", serialize_decomposition(gadget.decomposition, gadget.graph.vertex_count()));
    out << "graph=" << prefix << ".wig\n"
        << "decomposition=" << prefix << ".td\n"
        << "width=" << width(gadget.decomposition) << '\n'
        << "sum=" << gadget.instance.sum << '\n'
        << "epsilon=" << gadget.instance.epsilon.to_fraction_string() << '\n';
  } else if (o.kind == "random") {
    if (!o.seed) throw PreconditionError("gen random needs --seed");
    WeightModel model;
    if (o.model == "dyadic") {
      model = Dyadic{o.bits};
    } else if (o.model == "uniform") {
      model = UniformRational{o.max_den};
    } else {
      throw PreconditionError("unknown weight model " + o.model);
    }
    emit(o.out, serialize_graph(random_instance(o.n, o.p, model, *o.seed)), out);
  } else {
    throw PreconditionError("unknown generator " + o.kind);
  }
  return kOk;
}

int cmd_decomp_build(const std::string& graph_path, const std::string& strategy, const std::string& out_path,
                     std::ostream& out) {
  const WeightedDigraph g = parse_graph(read_file(graph_path));
  const auto s = parse_strategy(strategy);
  if (!s) throw PreconditionError("unknown decomposition strategy " + strategy);
  const TreeDecomposition d = build_decomposition(g, *s);
  emit(out_path, serialize_decomposition(d, g.vertex_count()), out);
  if (!out_path.empty()) out << "width=" << width(d) << '\n';
  return kOk;
}

int cmd_decomp_validate(const std::string& graph_path, const std::string& decomposition_path,
                        std::optional<int> root, std::ostream& out) {
  const WeightedDigraph g = parse_graph(read_file(graph_path));
  TreeDecomposition d = parse_decomposition(read_file(decomposition_path));
  if (root) d = root_at(d, *root - 1);
  if (auto violation = validate_decomposition(g, d)) {
    out << "invalid " << violation->to_string() << '\n';
    return kPrecondition;
  }
  out << "valid width=" << width(d) << '\n';
  return kOk;
}

int cmd_validate(const std::string& graph_path, const std::string& coloring_path, std::ostream& out) {
  const WeightedDigraph g = parse_graph(read_file(graph_path));
  const Coloring c = parse_coloring(read_file(coloring_path), g.vertex_count());
  if (auto violation = find_violation(g, c)) {
    out << "invalid vertex=" << violation->vertex << " indegree=" << violation->indegree.to_string() << '\n';
    return kPrecondition;
  }
  out << "valid colors=" << c.distinct_colors() << '\n';
  return kOk;
}

int cmd_experiment_conjecture(const ExperimentOptions& o, std::ostream& out) {
  if (!o.seed) throw PreconditionError("experiment needs --seed");
  if (o.trials < 0) throw PreconditionError("--trials must be nonnegative");
  if (o.max_n < 1 || o.max_n > ExactOptions{}.max_vertices) {
    throw PreconditionError("--max-n must lie in 1.." + std::to_string(ExactOptions{}.max_vertices));
  }
  std::map<int, int> histogram;
  for (int t = 0; t < o.trials; ++t) {
    const std::uint64_t seed = *o.seed + static_cast<std::uint64_t>(t);
    const int n = 1 + static_cast<int>(seed % static_cast<std::uint64_t>(o.max_n));
    const UndirectedWeightedGraph h = random_subcubic(n, o.edge_probability, o.heavy_probability, 8, seed);
    if (!is_conjecture_instance(h)) throw Error("sampler produced an instance outside the conjecture's class");
    const WeightedDigraph g = embed_undirected(h);
    const SolveResult r = exact_chi_w(g);
    ++histogram[r.chromatic];
    if (r.chromatic > 2) {
      out << "counterexample trial=" << t << " seed=" << seed << " chi_w=" << r.chromatic << '\n'
          << serialize_undirected(h);
      return kOk;
    }
  }
  out << "none found in " << o.trials << " trials\n";
  for (const auto& [chi, count] : histogram) out << "chi_w=" << chi << " count=" << count << '\n';
  return kOk;
}

}  // namespace wic::cli
