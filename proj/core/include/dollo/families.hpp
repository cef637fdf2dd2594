#pragma once

#include <cstdint>
#include <functional>
#include <utility>

#include "dollo/character.hpp"
#include "dollo/tree.hpp"

namespace dollo {

/// Largest n accepted by enumerate_shapes / for_each_shape / random_shape.
inline constexpr int k_max_shape_leaves = 20;

/// Caterpillar with leaves 1..n: leaf 1 is the child of the root and
/// leaves n-1, n form the single cherry. n = 1 gives the one-leaf tree.
Tree generate_caterpillar(int n);

/// Fully balanced tree of height h with leaves 1..2^h, numbered left to
/// right. h = 0 gives the one-leaf tree.
Tree generate_fully_balanced(int h);

/// (caterpillar(n_a), caterpillar(n_b)) with leaves relabeled 1..n_a+n_b,
/// the left block first. Requires n_a >= n_b >= 1.
Tree generate_semi_caterpillar(int n_a, int n_b);

/// True iff the subtree rooted at v has at most one cherry.
bool is_caterpillar(const Tree& tree, NodeId v);

/// True iff both maximal pending subtrees are caterpillars (vacuously true
/// for a single leaf).
bool is_semi_caterpillar(const Tree& tree);

/// Number of distinct unlabeled rooted binary tree shapes on n leaves
/// (the Wedderburn-Etherington numbers for n >= 1).
std::uint64_t shape_count(int n);

/// Visits one canonically labeled representative per shape, each exactly
/// once, in a deterministic order. Throws CapExceeded for n beyond
/// k_max_shape_leaves.
void for_each_shape(int n, const std::function<void(const Tree&)>& visit);

/// Materializes shape number `index` (0 <= index < shape_count(n)).
Tree shape_by_index(int n, std::uint64_t index);

/// Uniformly random shape on n leaves, deterministic in the seed.
Tree random_shape(int n, std::uint64_t seed);

/// Character on caterpillar(n), n >= 3, attaining the maximal Dollo score
/// n-2: state 1 on leaf 1 (the root child) and leaf n (one cherry leaf),
/// state 0 elsewhere.
CharacterVector max_loss_character(int n);

/// Tree/character family with a bounded Fitch parsimony score but an
/// unbounded Dollo score: caterpillar(6+a+b) with the character
/// 1 0 1^(a+1) 0^(b+1) 1 0 in leaf order. For every a, b >= 1 the Fitch
/// score of both the character and its inverse is 3, while the Dollo
/// scores are b+3 and a+2 respectively.
struct GapFamily {
  Tree tree;
  CharacterVector character;  // inverse obtainable via .inverted()
};
GapFamily gap_family(int a, int b);

}  // namespace dollo
