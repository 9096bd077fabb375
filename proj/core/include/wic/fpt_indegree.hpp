#pragma once

#include <cstdint>
#include <memory>

#include "wic/decomposition.hpp"
#include "wic/exact.hpp"
#include "wic/graph.hpp"

namespace wic {

/// Memo-table counters of a tree-decomposition DP solve.
struct MemoStats {
  std::uint64_t entries = 0;
  std::uint64_t hits = 0;
  /// Largest number of vertices in any memo key.
  int max_key_width = 0;
};

/// Dynamic program over a rooted tree decomposition that colors every bag
/// together with all in-neighbors of its vertices. V_i is X_i plus the
/// in-neighbors of X_i; a call on bag i receives the coloring of V_i ∩ V_p
/// fixed by its parent p and returns the fewest colors (measured as the
/// highest color index) needed for the subtree. Colors range over 1..width+1.
///
/// A solver owns its memo table and is not thread-safe; distinct solvers are
/// independent.
class IndegreeSolver {
 public:
  /// Throws PreconditionError if the decomposition does not validate.
  IndegreeSolver(const WeightedDigraph& g, const TreeDecomposition& d);
  ~IndegreeSolver();
  IndegreeSolver(const IndegreeSolver&) = delete;
  IndegreeSolver& operator=(const IndegreeSolver&) = delete;

  /// Optimal value with a witness reconstructed from the memo table. During
  /// reconstruction each vertex must be colored first at its deciding bag
  /// (bag-plus-in-neighbors mode) and never recolored; a breach throws.
  SolveResult solve();

  /// Same recursion without a memo table; value only.
  int solve_unmemoized();

  const MemoStats& stats() const;

  /// Sum over bags of (width+1)^|V_i ∩ V_p|: the most entries the key layout
  /// can produce.
  double structural_entry_cap() const;
  /// n * (width+1)^((width+1) * (max indegree + 1)), a bound in the
  /// parameters alone (|V_i| <= |X_i| * (max indegree + 1)).
  double parameter_entry_cap() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

SolveResult solve_fpt_indegree(const WeightedDigraph& g, const TreeDecomposition& d, MemoStats* stats = nullptr);

}  // namespace wic
