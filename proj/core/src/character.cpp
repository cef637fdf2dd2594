#include "dollo/character.hpp"

#include <algorithm>

#include "dollo/errors.hpp"

namespace dollo {

CharacterVector::CharacterVector(std::vector<std::uint8_t> states)
    : states_(std::move(states)) {
  for (std::uint8_t s : states_)
    if (s > 1) throw ValidationError("character states must be 0 or 1");
}

bool CharacterVector::all_zero() const {
  return std::all_of(states_.begin(), states_.end(),
                     [](std::uint8_t s) { return s == 0; });
}

int CharacterVector::ones_count() const {
  return static_cast<int>(std::count(states_.begin(), states_.end(), 1));
}

CharacterVector CharacterVector::inverted() const {
  std::vector<std::uint8_t> flipped(states_.size());
  std::transform(states_.begin(), states_.end(), flipped.begin(),
                 [](std::uint8_t s) { return static_cast<std::uint8_t>(1 - s); });
  return CharacterVector(std::move(flipped));
}

std::string CharacterVector::to_string() const {
  std::string out(states_.size(), '0');
  for (size_t i = 0; i < states_.size(); ++i)
    if (states_[i]) out[i] = '1';
  return out;
}

namespace {

CharacterVector parse_assignment_list(std::string_view text, const Tree& tree) {
  std::vector<std::int8_t> states(tree.leaf_count(), -1);
  size_t pos = 0;
  while (pos < text.size()) {
    size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(pos, end - pos);
    pos = end + 1;
    size_t eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0 || eq + 1 >= item.size())
      throw ValidationError("expected label=state: '" + std::string(item) + "'");
    std::string_view label = item.substr(0, eq);
    std::string_view value = item.substr(eq + 1);
    NodeId leaf = tree.find_leaf(label);
    if (leaf == k_no_node)
      throw ValidationError("unknown leaf label: " + std::string(label));
    if (value != "0" && value != "1")
      throw ValidationError("state must be 0 or 1 for leaf " + std::string(label));
    int rank = tree.leaf_rank(leaf);
    if (states[rank] != -1)
      throw ValidationError("duplicate leaf in character: " + std::string(label));
    states[rank] = value == "1" ? 1 : 0;
  }
  std::vector<std::uint8_t> out;
  out.reserve(states.size());
  for (int rank = 0; rank < static_cast<int>(states.size()); ++rank) {
    if (states[rank] == -1)
      throw ValidationError("character misses leaf " +
                            tree.leaf_label(tree.leaf_by_rank(rank)));
    out.push_back(static_cast<std::uint8_t>(states[rank]));
  }
  return CharacterVector(std::move(out));
}

}  // namespace

CharacterVector parse_character(std::string_view text, const Tree& tree) {
  if (text.find('=') != std::string_view::npos)
    return parse_assignment_list(text, tree);
  if (static_cast<int>(text.size()) != tree.leaf_count())
    throw ValidationError("character length " + std::to_string(text.size()) +
                          " does not match leaf count " +
                          std::to_string(tree.leaf_count()));
  std::vector<std::uint8_t> states;
  states.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1')
      throw ValidationError(std::string("invalid character state '") + c + "'");
    states.push_back(c == '1' ? 1 : 0);
  }
  return CharacterVector(std::move(states));
}

std::vector<CharacterVector> parse_character_lines(std::string_view text,
                                                   const Tree& tree) {
  std::vector<CharacterVector> out;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    if (size_t hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r'))
      line.remove_suffix(1);
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t'))
      line.remove_prefix(1);
    if (!line.empty()) out.push_back(parse_character(line, tree));
    if (end == text.size()) break;
  }
  return out;
}

void require_matching(const Tree& tree, const CharacterVector& f) {
  if (f.size() != tree.leaf_count())
    throw ValidationError("character of length " + std::to_string(f.size()) +
                          " on a tree with " + std::to_string(tree.leaf_count()) +
                          " leaves");
}

}  // namespace dollo
