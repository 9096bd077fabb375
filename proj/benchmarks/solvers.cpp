#include <benchmark/benchmark.h>

#include "wic/bounds.hpp"
#include "wic/decomposition.hpp"
#include "wic/exact.hpp"
#include "wic/fpt_budget.hpp"
#include "wic/fpt_indegree.hpp"
#include "wic/generators.hpp"

namespace {

using namespace wic;

// Sparse dyadic instance of the requested size; sparse enough that the
// decomposition width stays small.
WeightedDigraph instance(int n, int bits) {
  return random_instance(n, 2.0 / n, Dyadic{bits}, 42 + static_cast<std::uint64_t>(n));
}

void BM_ExactChiW(benchmark::State& state) {
  const WeightedDigraph g = instance(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(exact_chi_w(g).chromatic);
}
BENCHMARK(BM_ExactChiW)->DenseRange(8, 16, 4);

void BM_FptIndegree(benchmark::State& state) {
  const WeightedDigraph g = instance(static_cast<int>(state.range(0)), 2);
  const TreeDecomposition d = build_decomposition(g, DecompositionStrategy::MinFill);
  std::uint64_t entries = 0;
  for (auto _ : state) {
    MemoStats stats;
    benchmark::DoNotOptimize(solve_fpt_indegree(g, d, &stats).chromatic);
    entries = stats.entries;
  }
  state.counters["width"] = width(d);
  state.counters["memo_entries"] = static_cast<double>(entries);
}
BENCHMARK(BM_FptIndegree)->RangeMultiplier(2)->Range(8, 32);

void BM_FptBudget(benchmark::State& state) {
  const int bits = static_cast<int>(state.range(1));
  const WeightedDigraph g = instance(static_cast<int>(state.range(0)), bits);
  const TreeDecomposition d = build_decomposition(g, DecompositionStrategy::MinFill);
  std::uint64_t entries = 0;
  for (auto _ : state) {
    BudgetStats stats;
    benchmark::DoNotOptimize(solve_fpt_budget(g, d, bits, &stats).chromatic);
    entries = stats.color_entries + stats.distribute_entries;
  }
  state.counters["width"] = width(d);
  state.counters["memo_entries"] = static_cast<double>(entries);
}
BENCHMARK(BM_FptBudget)->ArgsProduct({{8, 16, 32}, {1, 2, 3}});

void BM_ExactSmallDecomposition(benchmark::State& state) {
  const WeightedDigraph g = random_instance(static_cast<int>(state.range(0)), 0.3, Dyadic{1}, 7);
  for (auto _ : state) benchmark::DoNotOptimize(build_decomposition(g, DecompositionStrategy::ExactSmall));
}
BENCHMARK(BM_ExactSmallDecomposition)->DenseRange(8, 16, 4);

void BM_GreedyRecolor(benchmark::State& state) {
  const WeightedDigraph g = random_instance(static_cast<int>(state.range(0)), 0.1, UniformRational{8}, 3);
  const int k = upper_bound_degree_weight(g);
  for (auto _ : state) benchmark::DoNotOptimize(greedy_recolor(g, k).steps);
}
BENCHMARK(BM_GreedyRecolor)->RangeMultiplier(4)->Range(16, 256);

}  // namespace

BENCHMARK_MAIN();
