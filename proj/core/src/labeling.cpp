#include "dollo/labeling.hpp"

#include <algorithm>

namespace dollo {
namespace {

struct Scratch {
  std::vector<std::uint8_t> has_one;  // per node: subtree contains a state-1 leaf
  NodeId b = k_no_node;
  int ones = 0;
};

// One bottom-up pass marking subtrees that contain a state-1 leaf, then a
// descent to the deepest node covering all of them.
Scratch mark_and_find_b(const Tree& tree, const CharacterVector& f,
                        LabelingStats* stats) {
  require_matching(tree, f);
  Scratch s;
  s.has_one.assign(tree.node_count(), 0);
  std::uint64_t visits = 0;
  for (NodeId v : tree.postorder()) {
    ++visits;
    if (tree.is_leaf(v)) {
      s.has_one[v] = leaf_state(tree, f, v);
      s.ones += s.has_one[v];
    } else {
      s.has_one[v] = s.has_one[tree.left(v)] | s.has_one[tree.right(v)];
    }
  }
  if (s.ones > 0) {
    NodeId b = tree.root();
    ++visits;
    while (!tree.is_leaf(b)) {
      const bool left_one = s.has_one[tree.left(b)];
      const bool right_one = s.has_one[tree.right(b)];
      if (left_one && right_one) break;
      b = left_one ? tree.left(b) : tree.right(b);
      ++visits;
    }
    s.b = b;
  }
  if (stats) stats->node_visits += visits;
  return s;
}

}  // namespace

std::optional<NodeId> b_node(const Tree& tree, const CharacterVector& f) {
  Scratch s = mark_and_find_b(tree, f, nullptr);
  if (s.b == k_no_node) return std::nullopt;
  return s.b;
}

OneTree one_tree(const Tree& tree, const CharacterVector& f,
                 LabelingStats* stats) {
  Scratch s = mark_and_find_b(tree, f, stats);
  OneTree out;
  out.b_node = s.b;
  if (s.b == k_no_node) return out;

  // Members are exactly the marked nodes below the birth node. A member's
  // 1-tree degree is its member-children count, plus one for its parent
  // unless it is the birth node (the 1-tree carries no root edge).
  auto [first, last] = tree.postorder_span(s.b);
  std::uint64_t visits = 0;
  for (int i = first; i <= last; ++i) {
    NodeId v = tree.postorder()[i];
    ++visits;
    if (!s.has_one[v]) continue;
    out.member_nodes.push_back(v);
    int degree = v == s.b ? 0 : 1;
    if (!tree.is_leaf(v))
      degree += s.has_one[tree.left(v)] + s.has_one[tree.right(v)];
    if (degree == 2) out.degree2_nodes.push_back(v);
  }
  if (stats) stats->node_visits += visits;
  std::sort(out.member_nodes.begin(), out.member_nodes.end());
  std::sort(out.degree2_nodes.begin(), out.degree2_nodes.end());
  return out;
}

DolloLabeling dollo_labeling(const Tree& tree, const CharacterVector& f,
                             LabelingStats* stats) {
  Scratch s = mark_and_find_b(tree, f, stats);
  DolloLabeling out;
  out.node_states.assign(tree.node_count(), 0);
  if (s.b == k_no_node) return out;

  out.birth_edge = Edge{tree.parent(s.b) == k_no_node ? k_root_parent
                                                      : tree.parent(s.b),
                        s.b};
  auto [first, last] = tree.postorder_span(s.b);
  std::uint64_t visits = 0;
  for (int i = first; i <= last; ++i) {
    NodeId v = tree.postorder()[i];
    ++visits;
    if (!s.has_one[v]) continue;
    out.node_states[v] = 1;
    if (tree.is_leaf(v)) continue;
    for (NodeId c : {tree.left(v), tree.right(v)})
      if (!s.has_one[c]) out.loss_edges.push_back({v, c});
  }
  if (stats) stats->node_visits += visits;
  std::sort(out.loss_edges.begin(), out.loss_edges.end(),
            [](const Edge& a, const Edge& b) { return a.child < b.child; });
  out.score_k = static_cast<int>(out.loss_edges.size());
  return out;
}

int dollo_score(const Tree& tree, const CharacterVector& f) {
  Scratch s = mark_and_find_b(tree, f, nullptr);
  if (s.ones <= 1) return 0;
  // Count of degree-2 members minus one for the birth node (its degree-2
  // slot marks the gain, not a loss).
  auto [first, last] = tree.postorder_span(s.b);
  int degree2 = 0;
  for (int i = first; i <= last; ++i) {
    NodeId v = tree.postorder()[i];
    if (!s.has_one[v]) continue;
    int degree = v == s.b ? 0 : 1;
    if (!tree.is_leaf(v))
      degree += s.has_one[tree.left(v)] + s.has_one[tree.right(v)];
    degree2 += degree == 2;
  }
  return degree2 - 1;
}

std::vector<NodeId> maximal_0B_nodes(const Tree& tree, const CharacterVector& f) {
  DolloLabeling labeling = dollo_labeling(tree, f);
  std::vector<NodeId> out;
  out.reserve(labeling.loss_edges.size());
  for (const Edge& e : labeling.loss_edges) out.push_back(e.child);
  return out;
}

bool is_persistent(const Tree& tree, const CharacterVector& f) {
  return dollo_score(tree, f) <= 1;
}

}  // namespace dollo
