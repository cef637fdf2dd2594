#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "dollo/tree.hpp"

namespace dollo {

/// Counts overflow 64 bits well before n = 128, so everything here is
/// arbitrary precision.
using BigInt = boost::multiprecision::cpp_int;

/// Per-size tallies of characters by their exact loss count. Entry k holds
/// the number of characters needing exactly k losses, for k = 0..n-2
/// (a single entry for n <= 2). With `cumulative` set, entry k instead
/// holds the "at most k losses" prefix sum.
struct CountTable {
  int n = 0;
  bool cumulative = false;
  std::vector<BigInt> counts;
};

/// Memo for the node-set counting recursions; one cell per (node, k).
/// Allocate per call sweep and share across all k. Cells are filled at most
/// once; the counters make that checkable.
class MemoTables {
 public:
  MemoTables(const Tree& tree, int k_max);

  int k_max() const { return k_max_; }
  /// Number of cell fills performed so far.
  std::uint64_t computations() const { return computations_; }
  /// Number of distinct cells holding a value. Equals computations() as
  /// long as no cell was ever recomputed.
  std::uint64_t distinct_cells_filled() const { return filled_; }

 private:
  friend BigInt extended_count(const Tree&, NodeId, int, MemoTables&);
  friend BigInt independent_count(const Tree&, NodeId, int, MemoTables&);

  int k_max_;
  std::vector<std::vector<BigInt>> extended_;
  std::vector<std::vector<BigInt>> independent_;
  std::vector<std::vector<bool>> extended_known_;
  std::vector<std::vector<bool>> independent_known_;
  std::uint64_t computations_ = 0;
  std::uint64_t filled_ = 0;
};

/// Number of extended independent node sets of size k in the subtree at
/// `node`: k nodes none of which is the subtree root, pairwise neither
/// ancestral nor siblings. By convention 1 for k = 0.
BigInt extended_count(const Tree& tree, NodeId node, int k, MemoTables& memo);

/// Number of independent node sets of size k in the subtree at `node`:
/// extended sets whose members additionally are not children of the
/// subtree root. By convention 1 for k = 0.
BigInt independent_count(const Tree& tree, NodeId node, int k, MemoTables& memo);

/// Number of characters with exact loss count k. Uses the closed form 2n
/// for k = 0; for k >= 1 sums independent-set counts over all subtrees
/// with at least two leaves. Returns 0 for k > n-2.
BigInt dollo_count(const Tree& tree, int k);

/// Full table for k = 0..n-2 from one shared memo; O(n^2 |V|) total work.
/// With `cumulative`, entries are replaced by their prefix sums.
CountTable dollo_count_all(const Tree& tree, bool cumulative = false);

/// Exact-count observer exposing the memo counters, for callers that want
/// to assert the no-recompute property.
CountTable dollo_count_all_instrumented(const Tree& tree, bool cumulative,
                                        std::uint64_t& cell_computations,
                                        std::uint64_t& distinct_cells);

/// Shape-based shortcut for the extremal count at k = n-2 (n >= 3): 0
/// unless both maximal pending subtrees are caterpillars, 2 when the
/// smaller side is a single leaf, 4 when both sides have two or more
/// leaves. Agrees with dollo_count(tree, n-2).
int dollo_count_n_minus_2(const Tree& tree);

}  // namespace dollo
