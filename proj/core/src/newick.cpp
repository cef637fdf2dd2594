#include "dollo/newick.hpp"

#include <cctype>
#include <vector>

#include "dollo/errors.hpp"

namespace dollo {
namespace {

class NewickScanner {
 public:
  explicit NewickScanner(std::string_view text) : text_(text) {}

  char peek() {
    skip_ignored();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  char take() {
    char c = peek();
    ++pos_;
    return c;
  }

  void expect(char c) {
    if (take() != c)
      throw ParseError(std::string("expected '") + c + "' at position " +
                       std::to_string(pos_ - 1));
  }

  bool at_end() {
    skip_ignored();
    return pos_ >= text_.size();
  }

  std::string read_label() {
    skip_ignored();
    std::string out;
    if (pos_ < text_.size() && text_[pos_] == '\'') {
      ++pos_;
      while (pos_ < text_.size()) {
        char c = text_[pos_++];
        if (c == '\'') {
          if (pos_ < text_.size() && text_[pos_] == '\'') {  // escaped quote
            out.push_back('\'');
            ++pos_;
            continue;
          }
          return out;
        }
        out.push_back(c);
      }
      throw ParseError("unterminated quoted label");
    }
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '(' || c == ')' || c == ',' || c == ':' || c == ';' || c == '[' ||
          std::isspace(static_cast<unsigned char>(c)))
        break;
      out.push_back(c);
      ++pos_;
    }
    return out;
  }

  // Branch lengths are parsed for syntax only; topology is all that matters.
  void skip_branch_length() {
    if (peek() != ':') return;
    ++pos_;
    skip_ignored();
    size_t start = pos_;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '-' ||
          c == '+' || c == 'e' || c == 'E') {
        ++pos_;
      } else {
        break;
      }
    }
    if (pos_ == start) throw ParseError("missing branch length after ':'");
  }

 private:
  void skip_ignored() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (c == '[') {
        size_t depth = 0;
        do {
          if (text_[pos_] == '[') ++depth;
          if (text_[pos_] == ']') --depth;
          ++pos_;
          if (pos_ > text_.size()) break;
        } while (depth > 0 && pos_ < text_.size());
        if (depth > 0) throw ParseError("unterminated '[' comment");
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  size_t pos_ = 0;
};

}  // namespace

Tree parse_newick(std::string_view text) {
  NewickScanner scan(text);
  TreeBuilder builder;

  // Iterative descent; each '(' opens a child list on the stack.
  std::vector<std::vector<NodeId>> groups;
  NodeId finished = k_no_node;
  bool have_node = false;

  auto close_node = [&](bool parse_suffix) {
    if (parse_suffix) {
      scan.read_label();  // internal node name, ignored
      scan.skip_branch_length();
    }
  };

  while (true) {
    if (scan.peek() == '(') {
      scan.take();
      groups.emplace_back();
      continue;
    }
    // leaf
    std::string label = scan.read_label();
    if (label.empty())
      throw ParseError("expected a leaf label at position or empty group");
    NodeId node = builder.add_leaf(std::move(label));
    scan.skip_branch_length();
    // Attach finished nodes upward while the current group ends.
    while (true) {
      if (groups.empty()) {
        finished = node;
        have_node = true;
        break;
      }
      groups.back().push_back(node);
      char c = scan.peek();
      if (c == ',') {
        scan.take();
        break;  // next sibling
      }
      if (c != ')')
        throw ParseError(std::string("unexpected '") + c + "' in Newick input");
      scan.take();
      std::vector<NodeId> children = std::move(groups.back());
      groups.pop_back();
      if (children.size() != 2)
        throw ParseError("non-binary node with " +
                         std::to_string(children.size()) + " children");
      node = builder.add_internal(children[0], children[1]);
      close_node(true);
    }
    if (have_node) break;
  }

  scan.expect(';');
  if (!scan.at_end()) throw ParseError("trailing content after ';'");
  try {
    return builder.build(finished);
  } catch (const ValidationError& e) {
    throw ParseError(e.what());
  }
}

std::string serialize_newick(const Tree& tree) {
  std::string out;
  // Explicit stack; entries are (node, child position 0..2).
  std::vector<std::pair<NodeId, int>> stack{{tree.root(), 0}};
  while (!stack.empty()) {
    auto& [v, phase] = stack.back();
    if (tree.is_leaf(v)) {
      out += tree.leaf_label(v);
      stack.pop_back();
      continue;
    }
    if (phase == 0) {
      out.push_back('(');
      phase = 1;
      stack.emplace_back(tree.left(v), 0);
    } else if (phase == 1) {
      out.push_back(',');
      phase = 2;
      stack.emplace_back(tree.right(v), 0);
    } else {
      out.push_back(')');
      stack.pop_back();
    }
  }
  out.push_back(';');
  return out;
}

}  // namespace dollo
