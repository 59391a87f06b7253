#pragma once

#include <cassert>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "thompson/normal_form.hpp"
#include "thompson/tree.hpp"

namespace thompson {

// Leaf exponents of a tree: a_k counts the carets whose leftmost leaf is k
// and which do not lie on the right spine.  The word of the tree is then
// x_0^{a_0} x_1^{a_1} ... , and an element with reduced pair (P, N) has
// normal form word(P) * word(N)^-1.
inline std::vector<int> leaf_exponents(const Tree& t) {
  std::vector<int> a(static_cast<std::size_t>(t.leaf_count()), 0);
  auto visit = [&](auto&& self, const Tree& node, int offset, bool onSpine) -> void {
    if (node.is_leaf()) return;
    if (!onSpine) a[static_cast<std::size_t>(offset)] += 1;
    self(self, node.left(), offset, false);
    self(self, node.right(), offset + node.left().leaf_count(), onSpine);
  };
  visit(visit, t, 0, true);
  return a;
}

inline std::vector<std::uint32_t> tree_word(const Tree& t) {
  std::vector<std::uint32_t> w;
  auto exps = leaf_exponents(t);
  for (std::uint32_t k = 0; k < exps.size(); ++k)
    for (int c = 0; c < exps[k]; ++c) w.push_back(k);
  return w;
}

namespace detail {

// Leaf positions k such that leaves k, k+1 are siblings under one caret.
inline void bottom_carets(const Tree& t, int offset, std::set<int>& out) {
  if (t.is_leaf()) return;
  if (t.left().is_leaf() && t.right().is_leaf()) {
    out.insert(offset);
    return;
  }
  bottom_carets(t.left(), offset, out);
  bottom_carets(t.right(), offset + t.left().leaf_count(), out);
}

inline Tree collapse_bottom_caret(const Tree& t, int k) {
  assert(!t.is_leaf());
  if (t.left().is_leaf() && t.right().is_leaf()) {
    assert(k == 0);
    return Tree::leaf();
  }
  int l = t.left().leaf_count();
  if (k + 1 < l) return Tree::caret(collapse_bottom_caret(t.left(), k), t.right());
  assert(k >= l);
  return Tree::caret(t.left(), collapse_bottom_caret(t.right(), k - l));
}

// Splits a refinement E of `base` into the subtrees grafted at base's leaves.
inline void refinement_slices(const Tree& base, const Tree& e, std::vector<Tree>& out) {
  if (base.is_leaf()) {
    out.push_back(e);
    return;
  }
  assert(!e.is_leaf());
  refinement_slices(base.left(), e.left(), out);
  refinement_slices(base.right(), e.right(), out);
}

inline Tree replace_leaves(const Tree& t, const std::vector<Tree>& slices, int& next) {
  if (t.is_leaf()) return slices[static_cast<std::size_t>(next++)];
  Tree l = replace_leaves(t.left(), slices, next);
  Tree r = replace_leaves(t.right(), slices, next);
  return Tree::caret(std::move(l), std::move(r));
}

}  // namespace detail

// A reduced tree-pair diagram for an element of F.  `pos` carries the
// positive part of the normal form, `neg` the negative part; both trees have
// the same number of leaves.
class TreePair {
 public:
  TreePair() = default;  // identity: (leaf, leaf)

  static TreePair from_trees(Tree pos, Tree neg) {
    if (pos.leaf_count() != neg.leaf_count())
      throw std::invalid_argument("tree pair requires equal leaf counts");
    TreePair p;
    p.pos_ = std::move(pos);
    p.neg_ = std::move(neg);
    p.reduce();
    return p;
  }

  const Tree& pos() const { return pos_; }
  const Tree& neg() const { return neg_; }
  int leaf_count() const { return pos_.leaf_count(); }

  friend bool operator==(const TreePair& a, const TreePair& b) {
    return a.pos_ == b.pos_ && a.neg_ == b.neg_;
  }

 private:
  void reduce() {
    for (;;) {
      std::set<int> bp, bn;
      detail::bottom_carets(pos_, 0, bp);
      detail::bottom_carets(neg_, 0, bn);
      int k = -1;
      for (int c : bp)
        if (bn.count(c)) {
          k = c;
          break;
        }
      if (k < 0) break;
      pos_ = detail::collapse_bottom_caret(pos_, k);
      neg_ = detail::collapse_bottom_caret(neg_, k);
    }
  }

  Tree pos_, neg_;
};

inline TreePair invert(const TreePair& p) { return TreePair::from_trees(p.neg(), p.pos()); }

// Simultaneous expansion of both trees at corresponding leaves keeps the
// element fixed, so the product (Pa, Na)(Pb, Nb) is read off by refining
// Na and Pb to their least common refinement.
inline TreePair compose(const TreePair& a, const TreePair& b) {
  Tree e = lcr(a.neg(), b.pos());
  std::vector<Tree> sa, sb;
  detail::refinement_slices(a.neg(), e, sa);
  detail::refinement_slices(b.pos(), e, sb);
  int next = 0;
  Tree liftedPos = detail::replace_leaves(a.pos(), sa, next);
  next = 0;
  Tree liftedNeg = detail::replace_leaves(b.neg(), sb, next);
  return TreePair::from_trees(std::move(liftedPos), std::move(liftedNeg));
}

namespace detail {

// pos tree of the generator x_n: a right vine with the shape ((. .) .)
// grafted at position n.
inline Tree generator_pos_tree(std::uint32_t n) {
  Tree b = Tree::caret(Tree::caret(Tree::leaf(), Tree::leaf()), Tree::leaf());
  Tree t = b;
  for (std::uint32_t i = 0; i < n; ++i) t = Tree::caret(Tree::leaf(), t);
  return t;
}

inline TreePair positive_word_pair(const std::vector<std::uint32_t>& word) {
  TreePair acc;
  for (auto n : word) {
    TreePair gen = TreePair::from_trees(generator_pos_tree(n),
                                        right_vine(static_cast<int>(n) + 3));
    acc = compose(acc, gen);
  }
  return acc;
}

}  // namespace detail

inline TreePair to_pair(const NormalForm& f) {
  TreePair p = detail::positive_word_pair(f.positive());
  TreePair n = detail::positive_word_pair(f.negative());
  return compose(p, invert(n));
}

inline NormalForm from_pair(const TreePair& p) {
  return NormalForm::from_raw_parts(tree_word(p.pos()), tree_word(p.neg()));
}

inline NormalForm multiply(const NormalForm& a, const NormalForm& b) {
  return from_pair(compose(to_pair(a), to_pair(b)));
}

// Common right translate: g in M with gi*g in M for all i.  The negative
// parts are positive elements; their least common refinement as domain
// trees is a common right multiple in M.
inline NormalForm common_right_translate(const std::vector<NormalForm>& gs) {
  if (gs.empty()) throw std::invalid_argument("common_right_translate needs a non-empty list");
  Tree e = Tree::leaf();
  for (const auto& g : gs) e = lcr(e, to_pair(g).neg());
  return NormalForm::from_raw_parts(tree_word(e), {});
}

}  // namespace thompson
