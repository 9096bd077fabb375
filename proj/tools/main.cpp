#include <CLI11.hpp>
#include <iostream>

#include "commands.hpp"
#include "wic/errors.hpp"

int main(int argc, char** argv) {
  using namespace wic::cli;
  CLI::App app{"Weighted improper coloring: exact and tree-decomposition solvers, bounds and generators"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "wic 0.1.0");

  SolveOptions solve;
  auto* solve_cmd = app.add_subcommand("solve", "Compute the weighted improper chromatic number");
  solve_cmd->add_option("graph", solve.graph_path, "Graph file (p wig or p wug)")->required()->check(CLI::ExistingFile);
  solve_cmd->add_option("--method", solve.method, "Solver")
      ->check(CLI::IsMember({"auto", "exact", "fpt-indegree", "fpt-budget"}))
      ->capture_default_str();
  solve_cmd->add_option("--decomposition", solve.decomposition_path, "PACE tree decomposition file")
      ->check(CLI::ExistingFile);
  solve_cmd->add_option("--strategy", solve.strategy, "Decomposition to build when none is given")
      ->check(CLI::IsMember({"min-degree", "min-fill", "exact-small"}));
  solve_cmd->add_option("--root", solve.root, "Root bag (1-based, as in the file)");
  solve_cmd->add_option("--bits", solve.bits, "Weight precision for fpt-budget (default: smallest that fits)");
  solve_cmd->add_option("--out", solve.out, "Write the witness coloring here");
  solve_cmd->add_option("--max-vertices", solve.max_vertices, "Size guard for the exact solver")->capture_default_str();
  solve_cmd->add_flag("--stats", solve.stats, "Print memo statistics and bounds");
  solve_cmd->add_flag("--all-methods", solve.all_methods, "Run every applicable solver and compare");

  std::string bounds_graph;
  std::string bounds_decomposition;
  auto* bounds_cmd = app.add_subcommand("bounds", "Print lower and upper bounds as key=value lines");
  bounds_cmd->add_option("graph", bounds_graph, "Graph file")->required()->check(CLI::ExistingFile);
  bounds_cmd->add_option("--decomposition", bounds_decomposition, "Adds the width+1 cap")->check(CLI::ExistingFile);

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate instances");
  gen_cmd->require_subcommand(1);
  auto* gen_defective = gen_cmd->add_subcommand("defective", "Defective coloring reduction of an undirected graph");
  gen_defective->add_option("input", gen.input, "Undirected graph file (p wug)")->required()->check(CLI::ExistingFile);
  gen_defective->add_option("--d", gen.d, "Defect")->required();
  auto* gen_embed = gen_cmd->add_subcommand("complete-embed", "Complete the arc set with zero-weight arcs");
  gen_embed->add_option("input", gen.input, "Graph file")->required()->check(CLI::ExistingFile);
  auto* gen_partition = gen_cmd->add_subcommand("partition", "Partition gadget and its path decomposition");
  gen_partition->add_option("values", gen.values, "Multiset S")->required();
  auto* gen_random = gen_cmd->add_subcommand("random", "Seeded random digraph");
  gen_random->add_option("--n", gen.n, "Vertex count")->required();
  gen_random->add_option("--p", gen.p, "Arc probability")->required();
  gen_random->add_option("--seed", gen.seed, "Random seed")->required();
  gen_random->add_option("--model", gen.model, "Weight model")
      ->check(CLI::IsMember({"dyadic", "uniform"}))
      ->capture_default_str();
  gen_random->add_option("--bits", gen.bits, "Dyadic precision")->capture_default_str();
  gen_random->add_option("--max-den", gen.max_den, "Largest denominator (uniform model)")->capture_default_str();
  for (auto* sub : {gen_defective, gen_embed, gen_partition, gen_random}) {
    sub->add_option("--out", gen.out, sub == gen_partition ? "Output prefix (.wig and .td)" : "Output file");
  }

  std::string decomp_graph;
  std::string decomp_file;
  std::string decomp_strategy = "min-fill";
  std::string decomp_out;
  std::optional<int> decomp_root;
  auto* decomp_cmd = app.add_subcommand("decomp", "Build or validate tree decompositions");
  decomp_cmd->require_subcommand(1);
  auto* decomp_build = decomp_cmd->add_subcommand("build", "Build a decomposition");
  decomp_build->add_option("graph", decomp_graph, "Graph file")->required()->check(CLI::ExistingFile);
  decomp_build->add_option("--strategy", decomp_strategy, "Elimination strategy")
      ->check(CLI::IsMember({"min-degree", "min-fill", "exact-small"}))
      ->capture_default_str();
  decomp_build->add_option("--out", decomp_out, "Output file");
  auto* decomp_validate = decomp_cmd->add_subcommand("validate", "Check a decomposition against a graph");
  decomp_validate->add_option("graph", decomp_graph, "Graph file")->required()->check(CLI::ExistingFile);
  decomp_validate->add_option("decomposition", decomp_file, "Decomposition file")->required()->check(CLI::ExistingFile);
  decomp_validate->add_option("--root", decomp_root, "Root bag (1-based)");

  std::string validate_graph;
  std::string validate_coloring;
  auto* validate_cmd = app.add_subcommand("validate", "Check a coloring against a graph");
  validate_cmd->add_option("graph", validate_graph, "Graph file")->required()->check(CLI::ExistingFile);
  validate_cmd->add_option("coloring", validate_coloring, "Coloring file")->required()->check(CLI::ExistingFile);

  ExperimentOptions experiment;
  auto* experiment_cmd = app.add_subcommand("experiment", "Experiments");
  experiment_cmd->require_subcommand(1);
  auto* conjecture = experiment_cmd->add_subcommand(
      "conjecture", "Search sub-cubic graphs with at most one weight-1 edge per vertex for chi_w > 2");
  conjecture->add_option("--max-n", experiment.max_n, "Largest vertex count")->capture_default_str();
  conjecture->add_option("--trials", experiment.trials, "Number of sampled graphs")->capture_default_str();
  conjecture->add_option("--seed", experiment.seed, "Random seed")->required();
  conjecture->add_option("--edge-p", experiment.edge_probability, "Edge proposal probability")->capture_default_str();
  conjecture->add_option("--heavy-p", experiment.heavy_probability, "Weight-1 edge probability")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    std::ostream& out = std::cout;
    if (*solve_cmd) return cmd_solve(solve, out);
    if (*bounds_cmd) return cmd_bounds(bounds_graph, bounds_decomposition, out);
    if (*gen_cmd) {
      for (auto* sub : gen_cmd->get_subcommands()) gen.kind = sub->get_name();
      return cmd_gen(gen, out);
    }
    if (*decomp_build) return cmd_decomp_build(decomp_graph, decomp_strategy, decomp_out, out);
    if (*decomp_validate) return cmd_decomp_validate(decomp_graph, decomp_file, decomp_root, out);
    if (*validate_cmd) return cmd_validate(validate_graph, validate_coloring, out);
    if (*conjecture) return cmd_experiment_conjecture(experiment, out);
  } catch (const wic::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const wic::PreconditionError& e) {
    std::cerr << "precondition failed: " << e.what() << '\n';
    return kPrecondition;
  } catch (const wic::LimitExceeded& e) {
    std::cerr << "limit exceeded: " << e.what() << '\n';
    return kResource;
  } catch (const wic::OverflowError& e) {
    std::cerr << "overflow: " << e.what() << '\n';
    return kResource;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
