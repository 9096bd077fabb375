#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "wic/decomposition.hpp"
#include "wic/exact.hpp"
#include "wic/graph.hpp"

namespace wic {

/// Largest precision accepted by the budget solver.
inline constexpr int kMaxPrecisionBits = 16;

/// A weight in b-bit fixed point: value = units * 2^-bits.
struct FixedPointWeight {
  std::int64_t units = 0;
  int bits = 0;
};

/// std::nullopt when w is not a multiple of 2^-bits.
std::optional<FixedPointWeight> to_fixed_point(const Weight& w, int bits);

/// Index (into g.arcs()) of the first arc whose weight is not a multiple of
/// 2^-bits, or std::nullopt when every weight is representable.
std::optional<std::size_t> check_fixed_point(const WeightedDigraph& g, int bits);

/// Smallest b >= 1 for which check_fixed_point succeeds; std::nullopt when
/// some weight is not dyadic (or needs more than kMaxPrecisionBits).
std::optional<int> minimal_precision(const WeightedDigraph& g);

struct BudgetStats {
  std::uint64_t color_entries = 0;
  std::uint64_t distribute_entries = 0;
  std::uint64_t hits = 0;
  int max_key_width = 0;
};

struct BudgetOptions {
  /// Split every shared vertex's budget over every child that holds it,
  /// exactly as the recursion is stated. When false, a vertex that no later
  /// child holds hands its whole remaining budget to the current child, which
  /// gives the same optimum because results never get worse with more budget.
  bool exhaustive_splits = false;
};

/// Dynamic program over a rooted tree decomposition for weights with b-bit
/// precision. Every vertex starts with a budget of 2^b - 1 units (1 - eps
/// with eps = 2^-b); an arc's weight is charged to its head's budget at the
/// topmost bag holding both endpoints, and a coloring is accepted while every
/// budget stays nonnegative. Color(i) enumerates colorings of X_i;
/// Distribute(p, t) splits the budgets of the vertices that bag p shares with
/// its t-th child between that child and the children after it.
///
/// A solver owns its memo tables and is not thread-safe.
class BudgetSolver {
 public:
  /// Throws PreconditionError when the decomposition is invalid or some weight
  /// is not a multiple of 2^-bits.
  BudgetSolver(const WeightedDigraph& g, const TreeDecomposition& d, int bits, BudgetOptions options = {});
  ~BudgetSolver();
  BudgetSolver(const BudgetSolver&) = delete;
  BudgetSolver& operator=(const BudgetSolver&) = delete;

  /// Optimal value and a witness replayed from the memo tables. Replay counts
  /// how often each arc is charged; a same-colored arc charged other than
  /// exactly once, or a negative budget, throws.
  SolveResult solve();

  const BudgetStats& stats() const;
  /// Charges per arc observed during the last witness replay.
  const std::vector<int>& charge_counts() const;

  /// n * (k+1)^(k+1) * 2^(b(k+1)) Color states.
  double color_entry_cap() const;
  /// n^2 * (k+1)^(k+1) * 2^(b(k+1)) Distribute states.
  double distribute_entry_cap() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Convenience wrapper. `bits` defaults to minimal_precision(g).
SolveResult solve_fpt_budget(const WeightedDigraph& g, const TreeDecomposition& d, std::optional<int> bits = {},
                             BudgetStats* stats = nullptr);

}  // namespace wic
