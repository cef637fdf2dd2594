#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace dollo {

/// Index of a node inside a Tree. Nodes are numbered in construction order.
using NodeId = std::int32_t;

/// Marks "no node" (e.g. the parent of the root).
inline constexpr NodeId k_no_node = -1;

/// Sentinel for the virtual ancestor above the root. It is never stored in
/// the node array; it only appears as the parent endpoint of the root edge,
/// and its state is always 0.
inline constexpr NodeId k_root_parent = -2;

/// A directed edge (parent, child). `parent` may be k_root_parent for the
/// root edge.
struct Edge {
  NodeId parent = k_no_node;
  NodeId child = k_no_node;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Immutable rooted binary leaf-labeled tree.
///
/// Every node is either a leaf or has exactly two children; when there is
/// a single leaf it is simultaneously the root. The virtual ancestor above
/// the root exists only implicitly (see k_root_parent). Leaf labels are
/// ordered ascending numerically when all of them are decimal integers and
/// lexicographically otherwise; that order defines the positional form of
/// binary characters.
///
/// Trees are immutable after construction and safe to share across threads;
/// all queries are pure reads.
class Tree {
 public:
  NodeId root() const { return root_; }
  int node_count() const { return static_cast<int>(parent_.size()); }
  int leaf_count() const { return static_cast<int>(leaves_in_order_.size()); }

  bool is_leaf(NodeId v) const { return left_[v] == k_no_node; }
  NodeId parent(NodeId v) const { return parent_[v]; }
  NodeId left(NodeId v) const { return left_[v]; }
  NodeId right(NodeId v) const { return right_[v]; }
  int depth(NodeId v) const { return depth_[v]; }

  /// Number of leaves in the subtree rooted at v (n_u in the tree model).
  int leaves_below(NodeId v) const { return leaves_below_[v]; }

  const std::string& leaf_label(NodeId v) const { return label_[v]; }

  /// Position of a leaf in label order, in [0, leaf_count). -1 for internal nodes.
  int leaf_rank(NodeId v) const { return leaf_rank_[v]; }
  NodeId leaf_by_rank(int rank) const { return leaves_in_order_[rank]; }

  /// Node id of the leaf with the given label, or k_no_node.
  NodeId find_leaf(std::string_view label) const;

  /// All nodes, children before parents. Nodes of any subtree form a
  /// contiguous block of this sequence ending at the subtree root.
  std::span<const NodeId> postorder() const { return postorder_; }

  /// Postorder positions [first, last] spanned by the subtree rooted at v.
  std::pair<int, int> postorder_span(NodeId v) const {
    return {post_index_[v] - (subtree_node_count(v) - 1), post_index_[v]};
  }
  int subtree_node_count(NodeId v) const { return 2 * leaves_below_[v] - 1; }

  /// Printable node name: the label for leaves, "n<id>" for internal nodes.
  std::string node_name(NodeId v) const;

  /// Builds a validated tree. `parent`/`left`/`right` use k_no_node for
  /// absent links; `label` must be non-empty exactly on leaves.
  static Tree build(std::vector<NodeId> parent, std::vector<NodeId> left,
                    std::vector<NodeId> right, std::vector<std::string> label);

 private:
  Tree() = default;

  NodeId root_ = k_no_node;
  std::vector<NodeId> parent_;
  std::vector<NodeId> left_;
  std::vector<NodeId> right_;
  std::vector<std::string> label_;
  std::vector<int> leaves_below_;
  std::vector<int> depth_;
  std::vector<int> leaf_rank_;
  std::vector<NodeId> leaves_in_order_;
  std::vector<NodeId> postorder_;
  std::vector<int> post_index_;
  std::unordered_map<std::string, NodeId> leaf_by_label_;
};

/// Incremental construction helper used by parsers and generators.
class TreeBuilder {
 public:
  NodeId add_leaf(std::string label);
  NodeId add_internal(NodeId left, NodeId right);
  /// Finalizes and validates; the builder is left empty.
  Tree build(NodeId root);

 private:
  std::vector<NodeId> parent_;
  std::vector<NodeId> left_;
  std::vector<NodeId> right_;
  std::vector<std::string> label_;
};

/// The two maximal pending subtrees below an internal node, first-listed
/// child first. Throws ValidationError for leaves.
std::pair<NodeId, NodeId> standard_decomposition(const Tree& tree, NodeId node);

/// Most recent common ancestor of a non-empty set of nodes.
NodeId mrca_nodes(const Tree& tree, std::span<const NodeId> nodes);

/// MRCA of a non-empty set of leaf labels. Throws ValidationError on an
/// empty set or an unknown label.
NodeId mrca(const Tree& tree, std::span<const std::string> leaf_labels);

/// Sum of leaves_below over all internal (non-leaf) nodes; 0 for a
/// single-leaf tree.
std::uint64_t sackin_index(const Tree& tree);

}  // namespace dollo
