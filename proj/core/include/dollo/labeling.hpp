#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dollo/character.hpp"
#include "dollo/tree.hpp"

namespace dollo {

/// Minimum induced subtree of the tree spanning all leaves in state 1.
/// Empty exactly when the character is all-zero. Its root is the birth
/// node (the MRCA of the state-1 leaves).
struct OneTree {
  /// Node ids of the 1-tree, ascending. Empty for the all-zero character.
  std::vector<NodeId> member_nodes;
  /// Root of the 1-tree; k_no_node when empty.
  NodeId b_node = k_no_node;
  /// Members whose degree within the 1-tree is exactly 2, ascending. The
  /// root counts its member children only (the 1-tree has no root edge),
  /// so it is included here whenever at least two leaves are in state 1.
  std::vector<NodeId> degree2_nodes;

  bool empty() const { return member_nodes.empty(); }
};

/// The unique minimal extension realizing a character with one gain and
/// the minimum number of losses.
struct DolloLabeling {
  /// State per node id; agrees with the character on leaves.
  std::vector<std::uint8_t> node_states;
  /// Number of losses (the Dollo score).
  int score_k = 0;
  /// Edge carrying the gain: directed into the birth node, with parent
  /// k_root_parent when the birth node is the root. Absent for the
  /// all-zero character.
  std::optional<Edge> birth_edge;
  /// Edges carrying the losses, ordered by child id. |loss_edges| == score_k.
  std::vector<Edge> loss_edges;
};

/// Work counter for the linearity checks: incremented once per node touched.
struct LabelingStats {
  std::uint64_t node_visits = 0;
};

/// MRCA of all leaves in state 1; nullopt for the all-zero character.
std::optional<NodeId> b_node(const Tree& tree, const CharacterVector& f);

OneTree one_tree(const Tree& tree, const CharacterVector& f,
                 LabelingStats* stats = nullptr);

/// Computes the unique minimal labeling in time linear in the node count.
DolloLabeling dollo_labeling(const Tree& tree, const CharacterVector& f,
                             LabelingStats* stats = nullptr);

/// Minimum number of losses needed to realize f with at most one gain.
/// Always in [0, n-2].
int dollo_score(const Tree& tree, const CharacterVector& f);

/// Topmost all-zero clade roots strictly below the birth node: the child
/// endpoints of the loss edges, ascending. Cardinality equals the score.
std::vector<NodeId> maximal_0B_nodes(const Tree& tree, const CharacterVector& f);

/// True iff f needs at most one loss (score 0 or 1).
bool is_persistent(const Tree& tree, const CharacterVector& f);

}  // namespace dollo
