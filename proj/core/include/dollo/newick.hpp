#pragma once

#include <string>
#include <string_view>

#include "dollo/tree.hpp"

namespace dollo {

/// Parses a rooted Newick string terminated by ';' into a binary tree.
/// Internal node names, branch lengths and bracketed comments are accepted
/// and discarded; child order is preserved. Throws ParseError on malformed
/// input, non-binary nodes, duplicate leaf names, or an empty tree.
Tree parse_newick(std::string_view text);

/// Topology-only Newick form with the stored child order, e.g. "(1,(2,3));".
std::string serialize_newick(const Tree& tree);

}  // namespace dollo
