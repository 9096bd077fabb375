#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace wic::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kParse = 2,
  kPrecondition = 3,
  kResource = 4,
};

struct SolveOptions {
  std::string graph_path;
  std::string method = "auto";
  std::string decomposition_path;
  std::string strategy;  // empty: exact-small when small enough, else min-fill
  std::optional<int> root;
  std::optional<int> bits;
  std::string out;
  bool stats = false;
  bool all_methods = false;
  int max_vertices = 16;
};

struct GenOptions {
  std::string kind;
  std::string input;
  std::vector<std::int64_t> values;
  int d = 0;
  int n = 0;
  double p = 0.0;
  std::optional<std::uint64_t> seed;
  std::string model = "dyadic";
  int bits = 3;
  std::int64_t max_den = 8;
  std::string out;
};

struct ExperimentOptions {
  int max_n = 10;
  int trials = 100;
  std::optional<std::uint64_t> seed;
  double edge_probability = 0.6;
  double heavy_probability = 0.5;
};

int cmd_solve(const SolveOptions& options, std::ostream& out);
int cmd_bounds(const std::string& graph_path, const std::string& decomposition_path, std::ostream& out);
int cmd_gen(const GenOptions& options, std::ostream& out);
int cmd_decomp_build(const std::string& graph_path, const std::string& strategy, const std::string& out_path,
                     std::ostream& out);
int cmd_decomp_validate(const std::string& graph_path, const std::string& decomposition_path,
                        std::optional<int> root, std::ostream& out);
int cmd_validate(const std::string& graph_path, const std::string& coloring_path, std::ostream& out);
int cmd_experiment_conjecture(const ExperimentOptions& options, std::ostream& out);

/// 64-bit FNV-1a of the text, as 16 hex digits.
std::string digest(const std::string& text);

}  // namespace wic::cli
