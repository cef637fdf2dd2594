#include "dollo/tree.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>

#include "dollo/errors.hpp"

namespace dollo {
namespace {

// Ascending numeric when every label is a decimal integer, lexicographic
// otherwise; ties broken by string to keep the order total.
bool parse_whole_number(std::string_view s, std::uint64_t& out) {
  if (s.empty() || s.size() > 19) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

}  // namespace

NodeId Tree::find_leaf(std::string_view label) const {
  auto it = leaf_by_label_.find(std::string(label));
  return it == leaf_by_label_.end() ? k_no_node : it->second;
}

std::string Tree::node_name(NodeId v) const {
  if (v == k_root_parent) return "rho'";
  if (is_leaf(v)) return label_[v];
  return "n" + std::to_string(v);
}

Tree Tree::build(std::vector<NodeId> parent, std::vector<NodeId> left,
                 std::vector<NodeId> right, std::vector<std::string> label) {
  const int n_nodes = static_cast<int>(parent.size());
  if (n_nodes == 0) throw ValidationError("tree must have at least one node");
  if (left.size() != parent.size() || right.size() != parent.size() ||
      label.size() != parent.size())
    throw ValidationError("inconsistent node arrays");

  Tree t;
  t.parent_ = std::move(parent);
  t.left_ = std::move(left);
  t.right_ = std::move(right);
  t.label_ = std::move(label);

  for (NodeId v = 0; v < n_nodes; ++v) {
    const bool has_left = t.left_[v] != k_no_node;
    const bool has_right = t.right_[v] != k_no_node;
    if (has_left != has_right)
      throw ValidationError("node with exactly one child: " + std::to_string(v));
    if (has_left == t.label_[v].empty())
      continue;
    throw ValidationError(has_left ? "internal node carries a leaf label"
                                   : "leaf without label");
  }

  t.root_ = k_no_node;
  for (NodeId v = 0; v < n_nodes; ++v) {
    if (t.parent_[v] == k_no_node) {
      if (t.root_ != k_no_node) throw ValidationError("multiple roots");
      t.root_ = v;
    }
  }
  if (t.root_ == k_no_node) throw ValidationError("no root (parent cycle)");

  // Iterative DFS; fills postorder, depth, leaves_below and checks that all
  // nodes hang off the root with consistent parent links.
  t.postorder_.reserve(n_nodes);
  t.depth_.assign(n_nodes, 0);
  t.leaves_below_.assign(n_nodes, 0);
  t.post_index_.assign(n_nodes, -1);
  std::vector<std::pair<NodeId, bool>> stack;
  stack.emplace_back(t.root_, false);
  while (!stack.empty()) {
    auto [v, expanded] = stack.back();
    stack.pop_back();
    if (expanded) {
      t.post_index_[v] = static_cast<int>(t.postorder_.size());
      t.postorder_.push_back(v);
      if (t.is_leaf(v)) {
        t.leaves_below_[v] = 1;
      } else {
        t.leaves_below_[v] =
            t.leaves_below_[t.left_[v]] + t.leaves_below_[t.right_[v]];
      }
      continue;
    }
    stack.emplace_back(v, true);
    if (!t.is_leaf(v)) {
      for (NodeId c : {t.right_[v], t.left_[v]}) {
        if (c < 0 || c >= n_nodes || t.parent_[c] != v)
          throw ValidationError("child/parent link mismatch at node " +
                                std::to_string(v));
        t.depth_[c] = t.depth_[v] + 1;
        stack.emplace_back(c, false);
      }
    }
  }
  if (static_cast<int>(t.postorder_.size()) != n_nodes)
    throw ValidationError("disconnected nodes in tree");

  for (NodeId v = 0; v < n_nodes; ++v) {
    if (t.is_leaf(v)) {
      auto [it, inserted] = t.leaf_by_label_.emplace(t.label_[v], v);
      if (!inserted) throw ValidationError("duplicate leaf label: " + t.label_[v]);
      t.leaves_in_order_.push_back(v);
    }
  }

  bool all_numeric = true;
  std::vector<std::uint64_t> numeric(n_nodes, 0);
  for (NodeId v : t.leaves_in_order_)
    all_numeric = all_numeric && parse_whole_number(t.label_[v], numeric[v]);
  std::sort(t.leaves_in_order_.begin(), t.leaves_in_order_.end(),
            [&](NodeId a, NodeId b) {
              if (all_numeric && numeric[a] != numeric[b])
                return numeric[a] < numeric[b];
              return t.label_[a] < t.label_[b];
            });
  t.leaf_rank_.assign(n_nodes, -1);
  for (int r = 0; r < static_cast<int>(t.leaves_in_order_.size()); ++r)
    t.leaf_rank_[t.leaves_in_order_[r]] = r;

  return t;
}

NodeId TreeBuilder::add_leaf(std::string label) {
  const NodeId id = static_cast<NodeId>(parent_.size());
  parent_.push_back(k_no_node);
  left_.push_back(k_no_node);
  right_.push_back(k_no_node);
  label_.push_back(std::move(label));
  return id;
}

NodeId TreeBuilder::add_internal(NodeId left, NodeId right) {
  const NodeId id = static_cast<NodeId>(parent_.size());
  parent_.push_back(k_no_node);
  left_.push_back(left);
  right_.push_back(right);
  label_.emplace_back();
  if (left < 0 || left >= id || right < 0 || right >= id || left == right)
    throw ValidationError("invalid children for internal node");
  parent_[left] = id;
  parent_[right] = id;
  return id;
}

Tree TreeBuilder::build(NodeId root) {
  if (root < 0 || root >= static_cast<NodeId>(parent_.size()))
    throw ValidationError("invalid root id");
  Tree t = Tree::build(std::move(parent_), std::move(left_), std::move(right_),
                       std::move(label_));
  parent_ = {};
  left_ = {};
  right_ = {};
  label_ = {};
  if (t.root() != root)
    throw ValidationError("dangling nodes: built root differs from requested");
  return t;
}

std::pair<NodeId, NodeId> standard_decomposition(const Tree& tree, NodeId node) {
  if (tree.is_leaf(node))
    throw ValidationError("not decomposable: node " + tree.node_name(node) +
                          " is a leaf");
  return {tree.left(node), tree.right(node)};
}

NodeId mrca_nodes(const Tree& tree, std::span<const NodeId> nodes) {
  if (nodes.empty()) throw ValidationError("MRCA of an empty set");
  NodeId anc = nodes.front();
  for (NodeId v : nodes.subspan(1)) {
    NodeId a = anc, b = v;
    while (tree.depth(a) > tree.depth(b)) a = tree.parent(a);
    while (tree.depth(b) > tree.depth(a)) b = tree.parent(b);
    while (a != b) {
      a = tree.parent(a);
      b = tree.parent(b);
    }
    anc = a;
  }
  return anc;
}

NodeId mrca(const Tree& tree, std::span<const std::string> leaf_labels) {
  if (leaf_labels.empty()) throw ValidationError("MRCA of an empty set");
  std::vector<NodeId> ids;
  ids.reserve(leaf_labels.size());
  for (const std::string& label : leaf_labels) {
    NodeId v = tree.find_leaf(label);
    if (v == k_no_node) throw ValidationError("unknown leaf label: " + label);
    ids.push_back(v);
  }
  return mrca_nodes(tree, ids);
}

std::uint64_t sackin_index(const Tree& tree) {
  std::uint64_t sum = 0;
  for (NodeId v : tree.postorder())
    if (!tree.is_leaf(v)) sum += static_cast<std::uint64_t>(tree.leaves_below(v));
  return sum;
}

}  // namespace dollo
