#include "dollo/fitch.hpp"

#include <algorithm>

#include "dollo/labeling.hpp"

namespace dollo {

FitchResult fitch_bottom_up(const Tree& tree, const CharacterVector& f) {
  require_matching(tree, f);
  FitchResult result;
  result.state_sets.assign(tree.node_count(), 0);
  for (NodeId v : tree.postorder()) {
    if (tree.is_leaf(v)) {
      result.state_sets[v] = leaf_state(tree, f, v) ? k_state1 : k_state0;
      continue;
    }
    const std::uint8_t a = result.state_sets[tree.left(v)];
    const std::uint8_t b = result.state_sets[tree.right(v)];
    if (a & b) {
      result.state_sets[v] = a & b;
    } else {
      result.state_sets[v] = a | b;
      ++result.union_count;
    }
  }
  result.parsimony_score = result.union_count;
  return result;
}

const std::vector<std::uint8_t>& fitch_top_down(const Tree& tree,
                                                FitchResult& result) {
  auto pick = [](std::uint8_t set, std::uint8_t preferred) -> std::uint8_t {
    if (set & preferred) return preferred == k_state1 ? 1 : 0;
    return set == k_state1 ? 1 : 0;  // singleton, or ambiguous resolved to 0
  };
  result.mp_extension.assign(tree.node_count(), 0);
  const auto post = tree.postorder();
  // Reverse postorder is a top-down order (parents before children).
  for (auto it = post.rbegin(); it != post.rend(); ++it) {
    const NodeId v = *it;
    const NodeId p = tree.parent(v);
    const std::uint8_t preferred =
        p == k_no_node ? k_state0
                       : (result.mp_extension[p] ? k_state1 : k_state0);
    result.mp_extension[v] = pick(result.state_sets[v], preferred);
  }
  return result.mp_extension;
}

int parsimony_score(const Tree& tree, const CharacterVector& f) {
  return fitch_bottom_up(tree, f).parsimony_score;
}

ScoreComparison compare_scores(const Tree& tree, const CharacterVector& f) {
  ScoreComparison c;
  c.l = parsimony_score(tree, f);
  c.k_f = dollo_score(tree, f);
  c.k_fbar = dollo_score(tree, f.inverted());
  c.bound_ok = c.l <= std::min(c.k_f, c.k_fbar) + 1;
  c.gap = c.k_f - c.l;
  return c;
}

}  // namespace dollo
