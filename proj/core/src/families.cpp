#include "dollo/families.hpp"

#include <random>
#include <string>

#include "dollo/errors.hpp"

namespace dollo {
namespace {

// One unlabeled shape per entry. Shapes of size 1 are implicit (the leaf);
// for size >= 2 a shape is an unordered pair of smaller shapes, stored with
// the smaller-or-equal side on the left. Enumeration order: ascending left
// size, then left index, then right index.
struct ShapeEntry {
  int left_size;
  std::uint32_t left_index;
  std::uint32_t right_index;
};

struct ShapeCatalog {
  // shapes[m] lists all entries of size m (empty for m <= 1).
  std::vector<std::vector<ShapeEntry>> shapes;

  std::uint64_t count(int m) const {
    return m == 1 ? 1 : shapes[m].size();
  }
};

const ShapeCatalog& catalog() {
  static const ShapeCatalog instance = [] {
    ShapeCatalog c;
    c.shapes.resize(k_max_shape_leaves + 1);
    for (int m = 2; m <= k_max_shape_leaves; ++m) {
      for (int i = 1; i <= m / 2; ++i) {
        const std::uint64_t left_n = c.count(i);
        const std::uint64_t right_n = c.count(m - i);
        for (std::uint64_t ai = 0; ai < left_n; ++ai) {
          const std::uint64_t b_begin = (i == m - i) ? ai : 0;
          for (std::uint64_t bi = b_begin; bi < right_n; ++bi) {
            c.shapes[m].push_back({i, static_cast<std::uint32_t>(ai),
                                   static_cast<std::uint32_t>(bi)});
          }
        }
      }
    }
    return c;
  }();
  return instance;
}

void require_shape_size(int n) {
  if (n < 1) throw ValidationError("shape enumeration requires n >= 1");
  if (n > k_max_shape_leaves)
    throw CapExceeded("shape enumeration capped at n = " +
                      std::to_string(k_max_shape_leaves) + " leaves, got " +
                      std::to_string(n));
}

NodeId materialize_shape(const ShapeCatalog& c, TreeBuilder& builder, int size,
                         std::uint64_t index, int& next_label) {
  if (size == 1) return builder.add_leaf(std::to_string(next_label++));
  const ShapeEntry& entry = c.shapes[size][index];
  NodeId left =
      materialize_shape(c, builder, entry.left_size, entry.left_index, next_label);
  NodeId right = materialize_shape(c, builder, size - entry.left_size,
                                   entry.right_index, next_label);
  return builder.add_internal(left, right);
}

// Caterpillar over the labels [first, last]; the cherry sits at the deep end.
NodeId build_caterpillar(TreeBuilder& builder, int first, int last) {
  if (first == last) return builder.add_leaf(std::to_string(first));
  std::vector<NodeId> leaves;
  for (int i = first; i <= last; ++i)
    leaves.push_back(builder.add_leaf(std::to_string(i)));
  NodeId spine = builder.add_internal(leaves[leaves.size() - 2], leaves.back());
  for (int i = static_cast<int>(leaves.size()) - 3; i >= 0; --i)
    spine = builder.add_internal(leaves[i], spine);
  return spine;
}

NodeId build_balanced(TreeBuilder& builder, int h, int& next_label) {
  if (h == 0) return builder.add_leaf(std::to_string(next_label++));
  NodeId left = build_balanced(builder, h - 1, next_label);
  NodeId right = build_balanced(builder, h - 1, next_label);
  return builder.add_internal(left, right);
}

}  // namespace

Tree generate_caterpillar(int n) {
  if (n < 1) throw ValidationError("caterpillar requires n >= 1");
  TreeBuilder builder;
  return builder.build(build_caterpillar(builder, 1, n));
}

Tree generate_fully_balanced(int h) {
  if (h < 0) throw ValidationError("fully balanced tree requires h >= 0");
  if (h > 25) throw CapExceeded("fully balanced tree capped at h = 25");
  TreeBuilder builder;
  int next_label = 1;
  return builder.build(build_balanced(builder, h, next_label));
}

Tree generate_semi_caterpillar(int n_a, int n_b) {
  if (n_b < 1 || n_a < n_b)
    throw ValidationError("semi-caterpillar requires n_a >= n_b >= 1");
  TreeBuilder builder;
  NodeId left = build_caterpillar(builder, 1, n_a);
  NodeId right = build_caterpillar(builder, n_a + 1, n_a + n_b);
  return builder.build(builder.add_internal(left, right));
}

bool is_caterpillar(const Tree& tree, NodeId v) {
  while (!tree.is_leaf(v)) {
    NodeId left = tree.left(v);
    NodeId right = tree.right(v);
    if (tree.is_leaf(left) && tree.is_leaf(right)) return true;
    if (!tree.is_leaf(left) && !tree.is_leaf(right)) return false;
    v = tree.is_leaf(left) ? right : left;
  }
  return true;
}

bool is_semi_caterpillar(const Tree& tree) {
  if (tree.leaf_count() == 1) return true;
  auto [a, b] = standard_decomposition(tree, tree.root());
  return is_caterpillar(tree, a) && is_caterpillar(tree, b);
}

std::uint64_t shape_count(int n) {
  require_shape_size(n);
  return catalog().count(n);
}

void for_each_shape(int n, const std::function<void(const Tree&)>& visit) {
  require_shape_size(n);
  const std::uint64_t total = catalog().count(n);
  for (std::uint64_t index = 0; index < total; ++index)
    visit(shape_by_index(n, index));
}

Tree shape_by_index(int n, std::uint64_t index) {
  require_shape_size(n);
  const ShapeCatalog& c = catalog();
  if (index >= c.count(n))
    throw ValidationError("shape index out of range for n = " + std::to_string(n));
  TreeBuilder builder;
  int next_label = 1;
  return builder.build(materialize_shape(c, builder, n, index, next_label));
}

Tree random_shape(int n, std::uint64_t seed) {
  require_shape_size(n);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> pick(0, catalog().count(n) - 1);
  return shape_by_index(n, pick(rng));
}

CharacterVector max_loss_character(int n) {
  if (n < 2) throw ValidationError("max-loss character requires n >= 2");
  std::vector<std::uint8_t> states(n, 0);
  states.front() = 1;
  states.back() = 1;
  return CharacterVector(std::move(states));
}

GapFamily gap_family(int a, int b) {
  if (a < 1 || b < 1) throw ValidationError("gap family requires a, b >= 1");
  const int n = 6 + a + b;
  std::vector<std::uint8_t> states(n, 0);
  states[0] = 1;
  for (int i = 2; i <= a + 2; ++i) states[i] = 1;
  states[n - 2] = 1;
  return {generate_caterpillar(n), CharacterVector(std::move(states))};
}

}  // namespace dollo
