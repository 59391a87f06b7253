#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "thompson/tree.hpp"

namespace thompson {

// A non-empty sequence of rooted binary trees with one distinguished tree.
// Text form: trees separated by single spaces, the marked one prefixed "*",
// e.g. "*(. .) . .".
struct MarkedForest {
  std::vector<Tree> trees;
  std::size_t mark = 0;

  MarkedForest() = default;
  MarkedForest(std::vector<Tree> ts, std::size_t m) : trees(std::move(ts)), mark(m) {
    if (trees.empty()) throw std::invalid_argument("forest must be non-empty");
    if (mark >= trees.size()) throw std::invalid_argument("mark out of range");
  }

  int leaf_count() const {
    int n = 0;
    for (const auto& t : trees) n += t.leaf_count();
    return n;
  }

  const Tree& marked() const { return trees[mark]; }

  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < trees.size(); ++i) {
      if (i) s += ' ';
      if (i == mark) s += '*';
      s += trees[i].str();
    }
    return s;
  }

  static MarkedForest parse(const std::string& text) {
    std::vector<Tree> ts;
    std::optional<std::size_t> mark;
    std::size_t pos = 0;
    while (pos < text.size()) {
      if (text[pos] == ' ') {
        ++pos;
        continue;
      }
      if (text[pos] == '*') {
        if (mark) throw std::invalid_argument("two marks in forest literal");
        mark = ts.size();
        ++pos;
      }
      ts.push_back(Tree::parse_prefix(text, pos));
    }
    if (!mark) throw std::invalid_argument("forest literal has no mark");
    return MarkedForest(std::move(ts), *mark);
  }

  friend bool operator==(const MarkedForest& a, const MarkedForest& b) {
    return a.mark == b.mark && a.trees == b.trees;
  }
};

// Labels of the partial left actions used by the automata.
enum class GenLabel {
  x0,
  x0inv,
  x1,
  x1inv,
  xbar1,
  xbar1inv,
  x2,
  x2inv,
};

inline GenLabel inverse(GenLabel l) {
  switch (l) {
    case GenLabel::x0: return GenLabel::x0inv;
    case GenLabel::x0inv: return GenLabel::x0;
    case GenLabel::x1: return GenLabel::x1inv;
    case GenLabel::x1inv: return GenLabel::x1;
    case GenLabel::xbar1: return GenLabel::xbar1inv;
    case GenLabel::xbar1inv: return GenLabel::xbar1;
    case GenLabel::x2: return GenLabel::x2inv;
    case GenLabel::x2inv: return GenLabel::x2;
  }
  throw std::logic_error("bad label");
}

inline std::string label_name(GenLabel l) {
  switch (l) {
    case GenLabel::x0: return "x0";
    case GenLabel::x0inv: return "x0^-1";
    case GenLabel::x1: return "x1";
    case GenLabel::x1inv: return "x1^-1";
    case GenLabel::xbar1: return "xb1";
    case GenLabel::xbar1inv: return "xb1^-1";
    case GenLabel::x2: return "x2";
    case GenLabel::x2inv: return "x2^-1";
  }
  throw std::logic_error("bad label");
}

// Partial left action of a generator on a marked forest.  heightCap (if
// >= 0) restricts only the caret-adding moves: both joined trees must have
// height < heightCap.  An absent result means the vertex does not accept
// the label.
inline std::optional<MarkedForest> apply_generator(const MarkedForest& f, GenLabel label,
                                                   int heightCap = -1) {
  auto capped = [&](const Tree& a, const Tree& b) {
    return heightCap >= 0 && (a.height() >= heightCap || b.height() >= heightCap);
  };
  switch (label) {
    case GenLabel::x0: {  // marker one step left
      if (f.mark == 0) return std::nullopt;
      return MarkedForest(f.trees, f.mark - 1);
    }
    case GenLabel::x0inv: {  // marker one step right
      if (f.mark + 1 >= f.trees.size()) return std::nullopt;
      return MarkedForest(f.trees, f.mark + 1);
    }
    case GenLabel::x1: {  // split the marked caret, mark the left part
      if (f.marked().is_leaf()) return std::nullopt;
      auto ts = f.trees;
      Tree t = ts[f.mark];
      ts[f.mark] = t.left();
      ts.insert(ts.begin() + static_cast<std::ptrdiff_t>(f.mark) + 1, t.right());
      return MarkedForest(std::move(ts), f.mark);
    }
    case GenLabel::x1inv: {  // join marked tree with its right neighbour
      if (f.mark + 1 >= f.trees.size()) return std::nullopt;
      if (capped(f.trees[f.mark], f.trees[f.mark + 1])) return std::nullopt;
      auto ts = f.trees;
      Tree joined = Tree::caret(ts[f.mark], ts[f.mark + 1]);
      ts.erase(ts.begin() + static_cast<std::ptrdiff_t>(f.mark) + 1);
      ts[f.mark] = joined;
      return MarkedForest(std::move(ts), f.mark);
    }
    case GenLabel::xbar1: {  // split the marked caret, mark the right part
      if (f.marked().is_leaf()) return std::nullopt;
      auto ts = f.trees;
      Tree t = ts[f.mark];
      ts[f.mark] = t.left();
      ts.insert(ts.begin() + static_cast<std::ptrdiff_t>(f.mark) + 1, t.right());
      return MarkedForest(std::move(ts), f.mark + 1);
    }
    case GenLabel::xbar1inv: {  // join marked tree with its left neighbour
      if (f.mark == 0) return std::nullopt;
      if (capped(f.trees[f.mark - 1], f.trees[f.mark])) return std::nullopt;
      auto ts = f.trees;
      Tree joined = Tree::caret(ts[f.mark - 1], ts[f.mark]);
      ts.erase(ts.begin() + static_cast<std::ptrdiff_t>(f.mark));
      ts[f.mark - 1] = joined;
      return MarkedForest(std::move(ts), f.mark - 1);
    }
    case GenLabel::x2: {
      // composite of the partial actions for x0^-1, x1, x0 in this order
      auto s1 = apply_generator(f, GenLabel::x0inv, heightCap);
      if (!s1) return std::nullopt;
      auto s2 = apply_generator(*s1, GenLabel::x1, heightCap);
      if (!s2) return std::nullopt;
      return apply_generator(*s2, GenLabel::x0, heightCap);
    }
    case GenLabel::x2inv: {
      auto s1 = apply_generator(f, GenLabel::x0inv, heightCap);
      if (!s1) return std::nullopt;
      auto s2 = apply_generator(*s1, GenLabel::x1inv, heightCap);
      if (!s2) return std::nullopt;
      return apply_generator(*s2, GenLabel::x0, heightCap);
    }
  }
  return std::nullopt;
}

// Ordered triple of rooted binary trees; the vertex type of the graphs
// Gamma_n.  Text form: "L | M | R".
struct TreeTriple {
  Tree left, middle, right;

  int leaf_count() const {
    return left.leaf_count() + middle.leaf_count() + right.leaf_count();
  }

  std::string str() const {
    return left.str() + " | " + middle.str() + " | " + right.str();
  }

  friend bool operator==(const TreeTriple& a, const TreeTriple& b) {
    return a.left == b.left && a.middle == b.middle && a.right == b.right;
  }
};

// Completion of a marked forest to a triple of trees: sentinel leaves are
// added on both ends, then carets roll the right part onto the sentinel
// (two rightmost trees first) and symmetrically on the left.  The marked
// tree stays in the middle unaltered; the leaf count grows by 2.
inline TreeTriple marked_to_triple(const MarkedForest& f) {
  Tree l = Tree::leaf();
  for (std::size_t i = 0; i < f.mark; ++i) l = Tree::caret(l, f.trees[i]);
  Tree r = Tree::leaf();
  for (std::size_t i = f.trees.size(); i-- > f.mark + 1;) r = Tree::caret(f.trees[i], r);
  return TreeTriple{l, f.marked(), r};
}

// All marked forests with the given number of leaves, trees capped at
// maxHeight (-1 = unbounded); deterministic order.
inline std::vector<MarkedForest> enumerate_marked_forests(int leaves, int maxHeight = -1) {
  std::vector<MarkedForest> out;
  std::vector<Tree> current;
  auto rec = [&](auto&& self, int remaining) -> void {
    if (remaining == 0) {
      for (std::size_t m = 0; m < current.size(); ++m) out.emplace_back(current, m);
      return;
    }
    for (int first = 1; first <= remaining; ++first) {
      for (const auto& t : enumerate_trees(first, maxHeight)) {
        current.push_back(t);
        self(self, remaining - first);
        current.pop_back();
      }
    }
  };
  if (leaves >= 1) rec(rec, leaves);
  return out;
}

// Number of (unmarked) forests with n leaves, trees capped at maxHeight.
inline BigInt count_forests(int leaves, int maxHeight = -1) {
  if (leaves < 1) return 0;
  std::vector<BigInt> f(static_cast<std::size_t>(leaves) + 1, 0);
  f[0] = 1;
  for (int n = 1; n <= leaves; ++n)
    for (int first = 1; first <= n; ++first)
      f[static_cast<std::size_t>(n)] +=
          count_trees(first, maxHeight) * f[static_cast<std::size_t>(n - first)];
  return f[static_cast<std::size_t>(leaves)];
}

}  // namespace thompson
