#pragma once

#include <cstdint>
#include <vector>

#include "dollo/character.hpp"
#include "dollo/counting.hpp"
#include "dollo/tree.hpp"

namespace dollo {

/// Caps for the exponential reference sweeps. Exceeding one raises
/// CapExceeded; the oracles never truncate silently.
inline constexpr int k_max_brute_score_leaves = 12;
inline constexpr int k_max_brute_table_leaves = 16;
inline constexpr int k_max_brute_subtree_nodes = 20;

/// Result of enumerating every extension of a character.
struct ExtensionEnumeration {
  /// Minimum loss count over all valid single-gain extensions.
  int min_losses = 0;
  /// Number of extensions that realize the character with one gain at most.
  std::uint64_t valid_extensions = 0;
  /// All extensions attaining min_losses, as per-node state maps.
  std::vector<std::vector<std::uint8_t>> minimizers;
};

/// Enumerates all 2^(#non-leaf nodes) extensions of f, keeps those whose
/// state-1 nodes form at most one downward-closed block (one gain, any
/// number of losses), and reports the minimum loss count with every
/// extension attaining it.
ExtensionEnumeration brute_force_dollo_score(const Tree& tree,
                                             const CharacterVector& f);

/// Tallies the loss count of every one of the 2^n characters.
CountTable brute_force_count_table(const Tree& tree);

/// All k-subsets of the subtree's nodes satisfying the independence
/// conditions, checked literally: no member is the subtree root, members
/// are pairwise non-ancestral and non-sibling, and unless `extended` no
/// member is a child of the subtree root. Sets and their elements are
/// sorted ascending.
std::vector<std::vector<NodeId>> brute_force_node_sets(const Tree& tree,
                                                       NodeId node, int k,
                                                       bool extended);

}  // namespace dollo
