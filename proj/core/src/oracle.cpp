#include "dollo/oracle.hpp"

#include <algorithm>

#include "dollo/errors.hpp"
#include "dollo/labeling.hpp"

namespace dollo {
namespace {

void require_leaf_cap(const Tree& tree, int cap, const char* what) {
  if (tree.leaf_count() > cap)
    throw CapExceeded(std::string(what) + " capped at n = " +
                      std::to_string(cap) + " leaves, got " +
                      std::to_string(tree.leaf_count()));
}

}  // namespace

ExtensionEnumeration brute_force_dollo_score(const Tree& tree,
                                             const CharacterVector& f) {
  require_matching(tree, f);
  require_leaf_cap(tree, k_max_brute_score_leaves, "extension enumeration");

  std::vector<NodeId> free_nodes;  // non-leaf nodes, freely assignable
  for (NodeId v : tree.postorder())
    if (!tree.is_leaf(v)) free_nodes.push_back(v);

  std::vector<std::uint8_t> states(tree.node_count(), 0);
  for (NodeId v : tree.postorder())
    if (tree.is_leaf(v)) states[v] = leaf_state(tree, f, v);

  ExtensionEnumeration out;
  out.min_losses = tree.node_count() + 1;

  const std::uint64_t assignments = std::uint64_t{1} << free_nodes.size();
  for (std::uint64_t bits = 0; bits < assignments; ++bits) {
    for (size_t i = 0; i < free_nodes.size(); ++i)
      states[free_nodes[i]] = (bits >> i) & 1;

    // Valid iff at most one state-1 node lacks a state-1 parent (the state-1
    // nodes form a single downward-closed block: one gain, only losses below).
    int tops = 0;
    int losses = 0;
    for (NodeId v = 0; v < tree.node_count(); ++v) {
      if (states[v]) {
        const NodeId p = tree.parent(v);
        if (p == k_no_node || !states[p]) ++tops;
      } else {
        const NodeId p = tree.parent(v);
        if (p != k_no_node && states[p]) ++losses;
      }
    }
    if (tops > 1) continue;
    ++out.valid_extensions;
    if (losses < out.min_losses) {
      out.min_losses = losses;
      out.minimizers.clear();
    }
    if (losses == out.min_losses) out.minimizers.push_back(states);
  }
  return out;
}

CountTable brute_force_count_table(const Tree& tree) {
  require_leaf_cap(tree, k_max_brute_table_leaves, "character sweep");
  const int n = tree.leaf_count();
  CountTable table;
  table.n = n;
  table.counts.assign(std::max(1, n - 1), 0);
  std::vector<std::uint8_t> states(n, 0);
  const std::uint64_t characters = std::uint64_t{1} << n;
  for (std::uint64_t bits = 0; bits < characters; ++bits) {
    for (int i = 0; i < n; ++i) states[i] = (bits >> i) & 1;
    table.counts[dollo_score(tree, CharacterVector(states))] += 1;
  }
  return table;
}

std::vector<std::vector<NodeId>> brute_force_node_sets(const Tree& tree,
                                                       NodeId node, int k,
                                                       bool extended) {
  const int size = tree.subtree_node_count(node);
  if (size > k_max_brute_subtree_nodes)
    throw CapExceeded("node-set enumeration capped at " +
                      std::to_string(k_max_brute_subtree_nodes) +
                      " subtree nodes, got " + std::to_string(size));
  if (k < 0) throw ValidationError("negative set size");

  auto [first, last] = tree.postorder_span(node);
  std::vector<NodeId> members(tree.postorder().begin() + first,
                              tree.postorder().begin() + last + 1);
  std::sort(members.begin(), members.end());

  auto is_ancestor = [&](NodeId anc, NodeId v) {
    while (v != k_no_node && tree.depth(v) >= tree.depth(anc)) {
      if (v == anc) return true;
      v = tree.parent(v);
    }
    return false;
  };

  std::vector<std::vector<NodeId>> sets;
  std::vector<NodeId> chosen;
  // Checks the definitional conditions on every k-subset directly.
  auto valid_with = [&](NodeId v) {
    if (v == node) return false;
    if (!extended && tree.parent(v) == node) return false;
    for (NodeId u : chosen) {
      if (is_ancestor(u, v) || is_ancestor(v, u)) return false;
      if (tree.parent(u) == tree.parent(v)) return false;  // siblings
    }
    return true;
  };

  std::vector<size_t> index_stack;
  size_t next = 0;
  while (true) {
    if (static_cast<int>(chosen.size()) == k) {
      sets.push_back(chosen);
      if (chosen.empty()) break;
      next = index_stack.back() + 1;
      index_stack.pop_back();
      chosen.pop_back();
      continue;
    }
    if (next >= members.size()) {
      if (chosen.empty()) break;
      next = index_stack.back() + 1;
      index_stack.pop_back();
      chosen.pop_back();
      continue;
    }
    if (valid_with(members[next])) {
      chosen.push_back(members[next]);
      index_stack.push_back(next);
    }
    ++next;
  }
  std::sort(sets.begin(), sets.end());
  return sets;
}

}  // namespace dollo
