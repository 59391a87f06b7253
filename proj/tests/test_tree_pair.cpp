#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "test_util.hpp"
#include "thompson/tree_pair.hpp"

using namespace thompson;

TEST_CASE("leaf exponents read off generator words") {
  CHECK(tree_word(Tree::parse("((. .) .)")) == std::vector<std::uint32_t>{0});
  CHECK(tree_word(Tree::parse("(. ((. .) .))")) == std::vector<std::uint32_t>{1});
  CHECK(tree_word(right_vine(5)).empty());
  CHECK(tree_word(Tree::parse("((. .) ((. .) .))")) == (std::vector<std::uint32_t>{0, 2}));
}

TEST_CASE("pair reduction removes matching carets") {
  Tree t = Tree::parse("((. .) (. .))");
  TreePair p = TreePair::from_trees(t, t);
  CHECK(p.pos().is_leaf());
  CHECK(p.neg().is_leaf());
}

TEST_CASE("normal form to pair and back") {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 300; ++trial) {
    auto f = nf_from_word(testutil::random_word(rng, 14, 5));
    CHECK(from_pair(to_pair(f)) == f);
  }
}

TEST_CASE("reduced pairs biject with normal forms") {
  std::mt19937_64 rng(2468);
  std::uniform_int_distribution<int> leaves(1, 8);
  for (int trial = 0; trial < 300; ++trial) {
    int n = leaves(rng);
    const auto& ts = enumerate_trees(n);
    std::uniform_int_distribution<std::size_t> pick(0, ts.size() - 1);
    TreePair p = TreePair::from_trees(ts[pick(rng)], ts[pick(rng)]);  // reduces
    CHECK(to_pair(from_pair(p)) == p);
  }
}

TEST_CASE("pair composition matches x1 * x0 = x0 x2") {
  auto a = NormalForm::generator(1);
  auto b = NormalForm::generator(0);
  CHECK(multiply(a, b).str() == "x0 x2");
}

TEST_CASE("simultaneous expansion preserves the element", "[property]") {
  std::mt19937_64 rng(777);
  for (int trial = 0; trial < 200; ++trial) {
    auto f = nf_from_word(testutil::random_word(rng, 10, 4));
    TreePair p = to_pair(f);
    // graft a caret at a random matching leaf of both trees
    std::uniform_int_distribution<int> leafDist(0, p.leaf_count() - 1);
    int k = leafDist(rng);
    Tree grown = Tree::leaf();
    auto grow = [&](auto&& self, const Tree& t, int offset) -> Tree {
      if (t.is_leaf())
        return offset == k ? Tree::caret(Tree::leaf(), Tree::leaf()) : t;
      int l = t.left().leaf_count();
      if (k < offset + l) return Tree::caret(self(self, t.left(), offset), t.right());
      return Tree::caret(t.left(), self(self, t.right(), offset + l));
    };
    Tree ep = grow(grow, p.pos(), 0);
    Tree en = grow(grow, p.neg(), 0);
    CHECK(from_pair(TreePair::from_trees(ep, en)) == f);
  }
}

TEST_CASE("common right translate lands in the monoid") {
  CHECK(common_right_translate({NormalForm::identity()}).is_identity());

  auto g = common_right_translate({invert(NormalForm::generator(0))});
  CHECK(multiply(invert(NormalForm::generator(0)), g).is_positive());

  auto xbar = nf_from_word(parse_word("x1 x0^-1"));
  auto h = common_right_translate({xbar});
  CHECK(h.is_positive());
  CHECK(multiply(xbar, h).is_positive());

  std::mt19937_64 rng(404);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<NormalForm> gs;
    std::uniform_int_distribution<int> cnt(1, 4);
    int n = cnt(rng);
    for (int i = 0; i < n; ++i)
      gs.push_back(nf_from_word(testutil::random_word(rng, 10, 4)));
    auto t = common_right_translate(gs);
    CHECK(t.is_positive());
    for (const auto& gi : gs) CHECK(multiply(gi, t).is_positive());
  }
}
