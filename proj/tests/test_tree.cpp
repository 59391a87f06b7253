#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "thompson/tree.hpp"

using namespace thompson;

TEST_CASE("catalan numbers") {
  CHECK(catalan(0) == 1);
  CHECK(catalan(3) == 5);
  CHECK(catalan(10) == 16796);
  // closed form cross-check
  for (int n = 0; n <= 20; ++n)
    CHECK(catalan(n) == factorial(2 * static_cast<unsigned>(n)) /
                            (factorial(static_cast<unsigned>(n)) *
                             factorial(static_cast<unsigned>(n) + 1)));
}

TEST_CASE("tree text form") {
  Tree c = Tree::caret(Tree::caret(Tree::leaf(), Tree::leaf()), Tree::leaf());
  CHECK(c.str() == "((. .) .)");
  CHECK(Tree::parse("((. .) .)") == c);
  CHECK(Tree::parse(".").is_leaf());
  CHECK(c.leaf_count() == 3);
  CHECK(c.height() == 2);
  CHECK_THROWS(Tree::parse("(. .) ."));
  CHECK_THROWS(Tree::parse("(."));
}

TEST_CASE("tree enumeration") {
  CHECK(enumerate_trees(1).size() == 1);
  CHECK(enumerate_trees(3).size() == 2);
  CHECK(enumerate_trees(4, 2).size() == 1);
  CHECK(enumerate_trees(4, 2)[0].str() == "((. .) (. .))");

  for (int n = 1; n <= 10; ++n) {
    const auto& ts = enumerate_trees(n);
    CHECK(BigInt(ts.size()) == catalan(n - 1));
    std::set<std::string> keys;
    for (const auto& t : ts) {
      CHECK(t.leaf_count() == n);
      keys.insert(t.str());
    }
    CHECK(keys.size() == ts.size());  // no duplicates
  }

  // height caps agree with the counting recursion
  for (int n = 1; n <= 9; ++n)
    for (int k = 0; k <= 5; ++k)
      CHECK(BigInt(enumerate_trees(n, k).size()) == count_trees(n, k));
}

TEST_CASE("least common refinement") {
  Tree a = Tree::parse("((. .) .)");
  Tree b = Tree::parse("(. (. .))");
  Tree e = lcr(a, b);
  CHECK(e.str() == "((. .) (. .))");
  CHECK(is_refinement(a, e));
  CHECK(is_refinement(b, e));
  CHECK(lcr(Tree::leaf(), b) == b);
  CHECK_FALSE(is_refinement(e, a));
}
