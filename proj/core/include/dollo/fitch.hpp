#pragma once

#include <cstdint>
#include <vector>

#include "dollo/character.hpp"
#include "dollo/tree.hpp"

namespace dollo {

/// State-set bits used by the Fitch passes.
inline constexpr std::uint8_t k_state0 = 1;
inline constexpr std::uint8_t k_state1 = 2;

struct FitchResult {
  /// Ancestral state set per node id as a bitmask (k_state0 | k_state1).
  std::vector<std::uint8_t> state_sets;
  /// Number of times the bottom-up pass took a union.
  int union_count = 0;
  /// Equals union_count: a change on the root edge never contributes.
  int parsimony_score = 0;
  /// Most parsimonious extension; filled by fitch_top_down, empty before.
  std::vector<std::uint8_t> mp_extension;
};

/// Bottom-up pass: leaves get their character state, every internal node
/// the intersection of its children's sets when non-empty, else the union.
FitchResult fitch_bottom_up(const Tree& tree, const CharacterVector& f);

/// Top-down pass producing one most parsimonious extension. Ambiguous sets
/// without parental guidance resolve to state 0, which keeps the result
/// deterministic and consistent with the all-zero state above the root.
/// Also stores the extension into result.mp_extension.
const std::vector<std::uint8_t>& fitch_top_down(const Tree& tree,
                                                FitchResult& result);

/// Minimum changing number over all extensions, not counting a change on
/// the root edge; equals the bottom-up union count.
int parsimony_score(const Tree& tree, const CharacterVector& f);

struct ScoreComparison {
  int l = 0;       // Fitch parsimony score
  int k_f = 0;     // Dollo score of f
  int k_fbar = 0;  // Dollo score of the inverted character
  bool bound_ok = false;  // l <= min(k_f, k_fbar) + 1
  int gap = 0;            // k_f - l
};

/// Fitch and Dollo scores of f and its inverse side by side.
ScoreComparison compare_scores(const Tree& tree, const CharacterVector& f);

}  // namespace dollo
