#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "thompson/numeric.hpp"

namespace thompson {

// Immutable rooted binary tree with shared subtrees.  Canonical text form:
// leaf = "." and caret = "(L R)".
class Tree {
  struct Node {
    std::shared_ptr<const Node> left, right;
    int leaves;
    int height;
  };

 public:
  Tree() = default;  // leaf

  static Tree leaf() { return {}; }

  static Tree caret(const Tree& l, const Tree& r) {
    Tree t;
    t.node_ = std::make_shared<const Node>(
        Node{l.node_, r.node_, l.leaf_count() + r.leaf_count(),
             std::max(l.height(), r.height()) + 1});
    return t;
  }

  bool is_leaf() const { return node_ == nullptr; }
  Tree left() const { return Tree(require()->left); }
  Tree right() const { return Tree(require()->right); }
  int leaf_count() const { return node_ ? node_->leaves : 1; }
  int carets() const { return leaf_count() - 1; }
  int height() const { return node_ ? node_->height : 0; }

  std::string str() const {
    std::string out;
    write(node_, out);
    return out;
  }

  static Tree parse(std::string_view s) {
    std::size_t pos = 0;
    Tree t = parse_at(s, pos);
    while (pos < s.size() && s[pos] == ' ') ++pos;
    if (pos != s.size()) throw std::invalid_argument("trailing input in tree literal");
    return t;
  }

  // Reads one tree literal starting at pos, advancing pos past it.
  static Tree parse_prefix(std::string_view s, std::size_t& pos) { return parse_at(s, pos); }

  friend bool operator==(const Tree& a, const Tree& b) { return equal(a.node_, b.node_); }

 private:
  explicit Tree(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  const Node* require() const {
    if (!node_) throw std::logic_error("leaf has no children");
    return node_.get();
  }

  static bool equal(const std::shared_ptr<const Node>& a, const std::shared_ptr<const Node>& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->leaves != b->leaves || a->height != b->height) return false;
    return equal(a->left, b->left) && equal(a->right, b->right);
  }

  static void write(const std::shared_ptr<const Node>& n, std::string& out) {
    if (!n) {
      out += '.';
      return;
    }
    out += '(';
    write(n->left, out);
    out += ' ';
    write(n->right, out);
    out += ')';
  }

  static Tree parse_at(std::string_view s, std::size_t& pos) {
    while (pos < s.size() && s[pos] == ' ') ++pos;
    if (pos >= s.size()) throw std::invalid_argument("unexpected end of tree literal");
    if (s[pos] == '.') {
      ++pos;
      return leaf();
    }
    if (s[pos] != '(') throw std::invalid_argument("expected '.' or '(' in tree literal");
    ++pos;
    Tree l = parse_at(s, pos);
    Tree r = parse_at(s, pos);
    while (pos < s.size() && s[pos] == ' ') ++pos;
    if (pos >= s.size() || s[pos] != ')') throw std::invalid_argument("expected ')' in tree literal");
    ++pos;
    return caret(l, r);
  }

  std::shared_ptr<const Node> node_;
};

inline BigInt catalan(int n) {
  if (n < 0) throw std::invalid_argument("catalan index must be non-negative");
  BigInt c = 1;
  for (int i = 0; i < n; ++i) {
    c *= 2 * (2 * i + 1);
    c /= i + 2;
  }
  return c;
}

// Number of trees with `leaves` leaves and height <= maxHeight (-1 = unbounded).
inline BigInt count_trees(int leaves, int maxHeight) {
  if (leaves < 1) return 0;
  if (maxHeight < 0 || maxHeight >= leaves) return catalan(leaves - 1);
  if (leaves == 1) return 1;
  if (maxHeight == 0) return 0;
  static std::map<std::pair<int, int>, BigInt> memo;
  auto key = std::make_pair(leaves, maxHeight);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  BigInt total = 0;
  for (int l = 1; l < leaves; ++l)
    total += count_trees(l, maxHeight - 1) * count_trees(leaves - l, maxHeight - 1);
  memo[key] = total;
  return total;
}

// All trees with `leaves` leaves and height <= maxHeight (-1 = unbounded),
// in a deterministic order.  Results are memoized with shared structure.
inline const std::vector<Tree>& enumerate_trees(int leaves, int maxHeight = -1) {
  if (leaves < 1) throw std::invalid_argument("trees need at least one leaf");
  // cap the bound by the greatest attainable height so memo keys stay canonical
  if (maxHeight < 0 || maxHeight >= leaves) maxHeight = leaves - 1;
  static std::map<std::pair<int, int>, std::vector<Tree>> memo;
  auto key = std::make_pair(leaves, maxHeight);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  std::vector<Tree> out;
  if (leaves == 1) {
    out.push_back(Tree::leaf());
  } else if (maxHeight >= 1) {
    for (int l = 1; l < leaves; ++l) {
      const auto& ls = enumerate_trees(l, maxHeight - 1);
      const auto& rs = enumerate_trees(leaves - l, maxHeight - 1);
      for (const auto& lt : ls)
        for (const auto& rt : rs) out.push_back(Tree::caret(lt, rt));
    }
  }
  return memo[key] = std::move(out);
}

// Least common refinement: the smallest tree that both arguments expand to.
inline Tree lcr(const Tree& a, const Tree& b) {
  if (a.is_leaf()) return b;
  if (b.is_leaf()) return a;
  return Tree::caret(lcr(a.left(), b.left()), lcr(a.right(), b.right()));
}

// True when `big` can be obtained from `small` by expanding leaves.
inline bool is_refinement(const Tree& small, const Tree& big) {
  if (small.is_leaf()) return true;
  if (big.is_leaf()) return false;
  return is_refinement(small.left(), big.left()) && is_refinement(small.right(), big.right());
}

inline Tree right_vine(int leaves) {
  Tree t = Tree::leaf();
  for (int i = 1; i < leaves; ++i) t = Tree::caret(Tree::leaf(), t);
  return t;
}

}  // namespace thompson
