#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "test_util.hpp"
#include "thompson/cyclic.hpp"
#include "thompson/normal_form.hpp"

using namespace thompson;

namespace {
const char* kPaperWord = "x0^-1 x0^-1 x1 x0 x0 x1^-1 x0^-1 x1^-1 x0 x1";
}

TEST_CASE("cyclic weights") {
  CHECK(cyclic_weights(CyclicWord(parse_word("x0 x0^-1"))) ==
        std::vector<long long>{0, 1});
  CHECK(cyclic_weights(CyclicWord(parse_word("x1 x1^-1"))) ==
        std::vector<long long>{0, 0});
  CHECK_THROWS_AS(cyclic_weights(CyclicWord(parse_word("x0"))), BalanceError);
  CHECK_THROWS(CyclicWord(parse_word("x2")));
}

TEST_CASE("maximal-weight x1 edges of the worked example") {
  CyclicWord w(parse_word(kPaperWord));
  // the second and fourth x1-letters carry the maximal edge weight
  auto renamed = max_weight_x1_positions(w);
  CHECK(renamed == std::vector<std::size_t>{5, 9});
}

TEST_CASE("the transformation T") {
  CyclicWord w(parse_word(kPaperWord));
  CyclicWord t = transform_T(w);
  CHECK(t.str() == "x0^-1 x0^-1 x1 x0 x0 x0^-1 x0^-1 x1^-1 x0 x0");
  CHECK(t.letters.size() == w.letters.size());

  CyclicWord tie = transform_T(CyclicWord(parse_word("x1 x1^-1")));
  CHECK(tie.str() == "x0 x0^-1");
}

TEST_CASE("base-point independence of the renamed set", "[property]") {
  std::mt19937_64 rng(2211);
  for (int trial = 0; trial < 200; ++trial) {
    GroupWord w = testutil::random_balanced_word(rng, 6);
    bool hasX1 = false;
    for (const auto& l : w) hasX1 |= l.index == 1;
    if (!hasX1 || w.empty()) continue;
    CyclicWord cw(w);
    auto base = max_weight_x1_positions(cw);
    // rotate the word by one letter; positions shift by one mod n
    GroupWord rot(w.begin() + 1, w.end());
    rot.push_back(w.front());
    auto rotated = max_weight_x1_positions(CyclicWord(rot));
    std::vector<std::size_t> expected;
    for (auto p : base) expected.push_back((p + w.size() - 1) % w.size());
    std::sort(expected.begin(), expected.end());
    CHECK(rotated == expected);
  }
}

TEST_CASE("decide_trivial on the worked example") {
  auto res = decide_trivial(CyclicWord(parse_word(kPaperWord)));
  CHECK(res.trivial);
  CHECK(res.trace.size() == 2);  // exactly two applications of T
  CHECK(res.trace[0].renamed == std::vector<std::size_t>{5, 9});
  CHECK(res.trace[0].sumX0 == 0);
  CHECK(res.trace[0].sumX1 == 0);
}

TEST_CASE("decide_trivial basics") {
  CHECK(decide_trivial(CyclicWord(parse_word("x0 x0^-1"))).trivial);
  CHECK(decide_trivial(CyclicWord{}).trivial);
  CHECK_FALSE(decide_trivial(CyclicWord(parse_word("x0 x1"))).trivial);
  // balanced but nontrivial: x1 and x0 do not commute
  CHECK_FALSE(decide_trivial(CyclicWord(parse_word("x1 x0 x1^-1 x0^-1"))).trivial);
}

TEST_CASE("cross-oracle agreement with the normal form", "[property]") {
  std::mt19937_64 rng(424242);
  int balancedChecked = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    GroupWord w;
    if (trial % 3 == 0) {
      w = testutil::random_balanced_word(rng, 6);
      ++balancedChecked;
    } else {
      w = testutil::random_word(rng, 24, 1);
    }
    bool viaCyclic = decide_trivial(CyclicWord(w)).trivial;
    bool viaNf = is_trivial_word(w);
    REQUIRE(viaCyclic == viaNf);
    // the optional free-reduction variant must agree as well
    REQUIRE(decide_trivial(CyclicWord(w), true).trivial == viaNf);
  }
  CHECK(balancedChecked >= 900);
}
