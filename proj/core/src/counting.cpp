#include "dollo/counting.hpp"

#include <algorithm>

#include "dollo/errors.hpp"
#include "dollo/families.hpp"

namespace dollo {
namespace {

void require_k(const MemoTables& memo, int k) {
  if (k < 0) throw ValidationError("negative set size");
  if (k > memo.k_max())
    throw ValidationError("k exceeds the memo table bound " +
                          std::to_string(memo.k_max()));
}

}  // namespace

MemoTables::MemoTables(const Tree& tree, int k_max) : k_max_(k_max) {
  if (k_max < 0) throw ValidationError("memo requires k_max >= 0");
  const size_t rows = static_cast<size_t>(tree.node_count());
  const size_t cols = static_cast<size_t>(k_max) + 1;
  extended_.assign(rows, std::vector<BigInt>(cols));
  independent_.assign(rows, std::vector<BigInt>(cols));
  extended_known_.assign(rows, std::vector<bool>(cols, false));
  independent_known_.assign(rows, std::vector<bool>(cols, false));
}

BigInt extended_count(const Tree& tree, NodeId node, int k, MemoTables& memo) {
  require_k(memo, k);
  if (k == 0) return 1;
  if (memo.extended_known_[node][k]) return memo.extended_[node][k];

  // Fill every unknown cell for the subtree, children before parents and
  // sizes ascending, so each cell is computed exactly once from complete
  // child rows.
  auto [first, last] = tree.postorder_span(node);
  for (int i = first; i <= last; ++i) {
    const NodeId v = tree.postorder()[i];
    for (int size = 1; size <= k; ++size) {
      if (memo.extended_known_[v][size]) continue;
      BigInt value = 0;
      if (!tree.is_leaf(v)) {
        const NodeId a = tree.left(v);
        const NodeId b = tree.right(v);
        auto e = [&](NodeId u, int j) -> const BigInt& {
          static const BigInt one = 1;
          return j == 0 ? one : memo.extended_[u][j];
        };
        for (int j = 0; j <= size; ++j) value += e(a, j) * e(b, size - j);
        value += e(a, size - 1);
        value += e(b, size - 1);
      }
      memo.extended_[v][size] = std::move(value);
      memo.extended_known_[v][size] = true;
      ++memo.computations_;
      ++memo.filled_;
    }
  }
  return memo.extended_[node][k];
}

BigInt independent_count(const Tree& tree, NodeId node, int k, MemoTables& memo) {
  require_k(memo, k);
  if (k == 0) return 1;
  if (memo.independent_known_[node][k]) return memo.independent_[node][k];

  BigInt value = 0;
  if (!tree.is_leaf(node)) {
    const NodeId a = tree.left(node);
    const NodeId b = tree.right(node);
    for (int j = 0; j <= k; ++j)
      value += extended_count(tree, a, j, memo) *
               extended_count(tree, b, k - j, memo);
  }
  memo.independent_[node][k] = value;
  memo.independent_known_[node][k] = true;
  ++memo.computations_;
  ++memo.filled_;
  return value;
}

BigInt dollo_count(const Tree& tree, int k) {
  if (k < 0) throw ValidationError("negative loss count");
  const int n = tree.leaf_count();
  if (k == 0) return 2 * n;
  if (k > n - 2) return 0;
  MemoTables memo(tree, k);
  BigInt total = 0;
  for (NodeId v : tree.postorder())
    if (tree.leaves_below(v) >= 2) total += independent_count(tree, v, k, memo);
  return total;
}

namespace {

CountTable count_all(const Tree& tree, bool cumulative, MemoTables& memo) {
  const int n = tree.leaf_count();
  CountTable table;
  table.n = n;
  table.cumulative = cumulative;
  table.counts.assign(std::max(1, n - 1), 0);
  table.counts[0] = 2 * n;
  for (int k = 1; k <= n - 2; ++k) {
    BigInt total = 0;
    for (NodeId v : tree.postorder())
      if (tree.leaves_below(v) >= 2)
        total += independent_count(tree, v, k, memo);
    table.counts[k] = std::move(total);
  }
  if (cumulative)
    for (size_t k = 1; k < table.counts.size(); ++k)
      table.counts[k] += table.counts[k - 1];
  return table;
}

}  // namespace

CountTable dollo_count_all(const Tree& tree, bool cumulative) {
  MemoTables memo(tree, std::max(0, tree.leaf_count() - 2));
  return count_all(tree, cumulative, memo);
}

CountTable dollo_count_all_instrumented(const Tree& tree, bool cumulative,
                                        std::uint64_t& cell_computations,
                                        std::uint64_t& distinct_cells) {
  MemoTables memo(tree, std::max(0, tree.leaf_count() - 2));
  CountTable table = count_all(tree, cumulative, memo);
  cell_computations = memo.computations();
  distinct_cells = memo.distinct_cells_filled();
  return table;
}

int dollo_count_n_minus_2(const Tree& tree) {
  const int n = tree.leaf_count();
  if (n < 3)
    throw ValidationError("extremal count requires n >= 3, got " +
                          std::to_string(n));
  auto [a, b] = standard_decomposition(tree, tree.root());
  if (!is_caterpillar(tree, a) || !is_caterpillar(tree, b)) return 0;
  const int smaller = std::min(tree.leaves_below(a), tree.leaves_below(b));
  return smaller == 1 ? 2 : 4;
}

}  // namespace dollo
