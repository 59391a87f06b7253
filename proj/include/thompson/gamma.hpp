#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "thompson/forest.hpp"
#include "thompson/graph.hpp"

namespace thompson {

// Number of ordered triples of trees with n leaves in total, by the two
// closed forms c_{n-1} - c_{n-2} = 3(2n-4)!/(n!(n-3)!).
inline BigInt triple_count(int n) {
  if (n < 3) throw std::invalid_argument("triples need at least 3 leaves");
  BigInt byCatalan = catalan(n - 1) - catalan(n - 2);
  BigInt byFactorial = 3 * factorial(static_cast<unsigned>(2 * n - 4)) /
                       (factorial(static_cast<unsigned>(n)) * factorial(static_cast<unsigned>(n - 3)));
  if (byCatalan != byFactorial)
    throw std::logic_error("triple count closed forms disagree");
  return byCatalan;
}

// Partial left actions on triples.  Each caret-moving rule removes one caret
// and rolls a new one onto the opposite end, so the leaf count is preserved.
inline std::optional<TreeTriple> triple_action(const TreeTriple& t, GenLabel label) {
  switch (label) {
    case GenLabel::x0:
      if (t.left.is_leaf()) return std::nullopt;
      return TreeTriple{t.left.left(), t.left.right(), Tree::caret(t.middle, t.right)};
    case GenLabel::x0inv:
      if (t.right.is_leaf()) return std::nullopt;
      return TreeTriple{Tree::caret(t.left, t.middle), t.right.left(), t.right.right()};
    case GenLabel::x1:
      if (t.middle.is_leaf()) return std::nullopt;
      return TreeTriple{t.left, t.middle.left(), Tree::caret(t.middle.right(), t.right)};
    case GenLabel::x1inv:
      if (t.right.is_leaf()) return std::nullopt;
      return TreeTriple{t.left, Tree::caret(t.middle, t.right.left()), t.right.right()};
    case GenLabel::xbar1:
      if (t.middle.is_leaf()) return std::nullopt;
      return TreeTriple{Tree::caret(t.left, t.middle.left()), t.middle.right(), t.right};
    case GenLabel::xbar1inv:
      if (t.left.is_leaf()) return std::nullopt;
      return TreeTriple{t.left.left(), Tree::caret(t.left.right(), t.middle), t.right};
    default:
      throw std::invalid_argument("label not defined on triples");
  }
}

inline std::vector<TreeTriple> enumerate_triples(int n) {
  std::vector<TreeTriple> out;
  for (int a = 1; a <= n - 2; ++a)
    for (int b = 1; b <= n - 1 - a; ++b) {
      int c = n - a - b;
      for (const auto& l : enumerate_trees(a))
        for (const auto& m : enumerate_trees(b))
          for (const auto& r : enumerate_trees(c)) out.push_back({l, m, r});
    }
  return out;
}

constexpr std::array<GenLabel, 3> kGammaLabels = {GenLabel::x0, GenLabel::x1, GenLabel::xbar1};

// The graph Gamma_n on all triples with n total leaves; edges are the
// x0/x1/xbar1 actions (one directed edge per direction).
inline LabelledGraph gamma_graph(int n) {
  if (n < 3) throw std::invalid_argument("gamma graphs start at n = 3");
  LabelledGraph g;
  auto triples = enumerate_triples(n);
  for (const auto& t : triples) g.add_vertex(t.str());
  for (const auto& t : triples) {
    for (GenLabel l : kGammaLabels) {
      if (auto img = triple_action(t, l)) {
        g.add_edge(t.str(), label_name(l), img->str());
        g.add_edge(img->str(), label_name(inverse(l)), t.str());
      }
    }
  }
  return g;
}

// Red-caret painting: the marked forest assigned to a vertex v of a tree.
// The carets above v are removed top-down; the subtrees hanging off the
// root-to-v path become the forest and the subtree at v is marked.
inline MarkedForest forest_of_vertex(const Tree& root, const std::vector<int>& path) {
  std::vector<Tree> leftTrees, rightTrees;
  Tree cur = root;
  for (int step : path) {
    if (step == 0) {
      rightTrees.insert(rightTrees.begin(), cur.right());
      cur = cur.left();
    } else {
      leftTrees.push_back(cur.left());
      cur = cur.right();
    }
  }
  std::vector<Tree> all = leftTrees;
  std::size_t mark = all.size();
  all.push_back(cur);
  all.insert(all.end(), rightTrees.begin(), rightTrees.end());
  return MarkedForest(std::move(all), mark);
}

struct ScatteredGraph {
  LabelledGraph graph;
  BigInt preQuotientVertices = 0;
  // class key -> number of (tree, vertex) copies mapping to it
  std::map<std::string, BigInt> multiplicity;
};

// Disjoint union of all trees with n carets, vertices identified by their
// red-caret marked forest; caret sides become x1 (left) and xbar1 (right)
// edges directed away from the apex.
inline ScatteredGraph scattered_graph(int carets) {
  if (carets < 0) throw std::invalid_argument("caret count must be non-negative");
  ScatteredGraph out;
  const auto& trees = enumerate_trees(carets + 1);
  std::vector<int> path;
  for (const auto& root : trees) {
    auto walk = [&](auto&& self, const Tree& node) -> void {
      out.preQuotientVertices += 1;
      MarkedForest f = forest_of_vertex(root, path);
      std::string key = f.str();
      out.multiplicity[key] += 1;
      out.graph.add_vertex(key);
      if (node.is_leaf()) return;
      // apex -> child edges for this caret
      path.push_back(0);
      MarkedForest lf = forest_of_vertex(root, path);
      self(self, node.left());
      path.back() = 1;
      MarkedForest rf = forest_of_vertex(root, path);
      self(self, node.right());
      path.pop_back();
      out.graph.add_edge(key, label_name(GenLabel::x1), lf.str());
      out.graph.add_edge(lf.str(), label_name(GenLabel::x1inv), key);
      out.graph.add_edge(key, label_name(GenLabel::xbar1), rf.str());
      out.graph.add_edge(rf.str(), label_name(GenLabel::xbar1inv), key);
    };
    walk(walk, root);
  }
  return out;
}

}  // namespace thompson
