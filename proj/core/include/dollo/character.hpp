#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dollo/tree.hpp"

namespace dollo {

/// Binary state assignment on the leaf set of a tree, stored positionally
/// in leaf label order (the f(1)f(2)...f(n) convention).
class CharacterVector {
 public:
  CharacterVector() = default;
  explicit CharacterVector(std::vector<std::uint8_t> states);

  int size() const { return static_cast<int>(states_.size()); }
  std::uint8_t operator[](int rank) const { return states_[rank]; }

  bool all_zero() const;
  int ones_count() const;
  CharacterVector inverted() const;

  /// Positional form, e.g. "100001".
  std::string to_string() const;

  friend bool operator==(const CharacterVector&, const CharacterVector&) = default;

 private:
  std::vector<std::uint8_t> states_;
};

/// Parses either the positional form ("100001") or a label=state list
/// ("1=1,2=0,..."); the character must cover the tree's leaf set exactly.
/// Throws ValidationError on wrong length, bad state symbols, or
/// missing/duplicate/unknown leaves.
CharacterVector parse_character(std::string_view text, const Tree& tree);

/// One positional character per line; '#' starts a comment, blank lines
/// are skipped.
std::vector<CharacterVector> parse_character_lines(std::string_view text,
                                                   const Tree& tree);

/// State of a leaf node under f.
inline std::uint8_t leaf_state(const Tree& tree, const CharacterVector& f,
                               NodeId leaf) {
  return f[tree.leaf_rank(leaf)];
}

/// Throws ValidationError unless f is defined on exactly the tree's leaves.
void require_matching(const Tree& tree, const CharacterVector& f);

}  // namespace dollo
