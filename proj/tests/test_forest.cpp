#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

#include "thompson/forest.hpp"

using namespace thompson;

namespace {
const std::array<GenLabel, 8> kAllLabels = {
    GenLabel::x0,    GenLabel::x0inv,    GenLabel::x1, GenLabel::x1inv,
    GenLabel::xbar1, GenLabel::xbar1inv, GenLabel::x2, GenLabel::x2inv};
}

TEST_CASE("forest text form") {
  MarkedForest f = MarkedForest::parse("*(. .) . .");
  CHECK(f.trees.size() == 3);
  CHECK(f.mark == 0);
  CHECK(f.leaf_count() == 4);
  CHECK(MarkedForest::parse(f.str()) == f);
  CHECK_THROWS(MarkedForest::parse(". ."));      // no mark
  CHECK_THROWS(MarkedForest::parse("*. *."));    // two marks
}

TEST_CASE("generator actions on marked forests") {
  MarkedForest two = MarkedForest::parse("*. .");
  auto shifted = apply_generator(two, GenLabel::x0inv);
  REQUIRE(shifted);
  CHECK(shifted->str() == ". *.");
  CHECK_FALSE(apply_generator(two, GenLabel::x0));

  auto caret = apply_generator(MarkedForest::parse("*(. .)"), GenLabel::x1);
  REQUIRE(caret);
  CHECK(caret->str() == "*. .");

  CHECK_FALSE(apply_generator(MarkedForest::parse("*."), GenLabel::x1));

  // xbar1 marks the right part
  auto bar = apply_generator(MarkedForest::parse("*(. .)"), GenLabel::xbar1);
  REQUIRE(bar);
  CHECK(bar->str() == ". *.");
}

TEST_CASE("height cap restricts caret-adding moves only") {
  MarkedForest f = MarkedForest::parse("*(. .) (. .)");
  CHECK(apply_generator(f, GenLabel::x1, 1));        // removing is never capped
  CHECK_FALSE(apply_generator(f, GenLabel::x1inv, 1));
  CHECK(apply_generator(f, GenLabel::x1inv, 2));
  CHECK(apply_generator(f, GenLabel::x1inv));        // unbounded
}

TEST_CASE("actions are mutually inverse partial maps", "[property]") {
  for (const auto& f : enumerate_marked_forests(5)) {
    for (GenLabel l : kAllLabels) {
      auto img = apply_generator(f, l);
      if (!img) continue;
      auto back = apply_generator(*img, inverse(l));
      REQUIRE(back);
      CHECK(*back == f);
    }
  }
}

TEST_CASE("xbar1 equals x1 then x0^-1, x2 equals the three-step composite", "[property]") {
  for (const auto& f : enumerate_marked_forests(6)) {
    // xbar1
    auto direct = apply_generator(f, GenLabel::xbar1);
    std::optional<MarkedForest> composite = apply_generator(f, GenLabel::x1);
    if (composite) composite = apply_generator(*composite, GenLabel::x0inv);
    CHECK(direct == composite);
    // x2 = x0^-1 then x1 then x0 (letters applied left to right)
    auto d2 = apply_generator(f, GenLabel::x2);
    std::optional<MarkedForest> c2 = apply_generator(f, GenLabel::x0inv);
    if (c2) c2 = apply_generator(*c2, GenLabel::x1);
    if (c2) c2 = apply_generator(*c2, GenLabel::x0);
    CHECK(d2 == c2);
  }
}

TEST_CASE("marked forest to triple completion") {
  CHECK(marked_to_triple(MarkedForest::parse("*.")).str() == ". | . | .");
  CHECK(marked_to_triple(MarkedForest::parse("*. .")).str() == ". | . | (. .)");
  CHECK(marked_to_triple(MarkedForest::parse(". *.")).str() == "(. .) | . | .");
  // middle tree unchanged, leaf count grows by two
  MarkedForest f = MarkedForest::parse(". *(. (. .)) . (. .)");
  auto t = marked_to_triple(f);
  CHECK(t.middle == f.marked());
  CHECK(t.leaf_count() == f.leaf_count() + 2);
}

TEST_CASE("marked_to_triple is injective per leaf budget", "[property]") {
  for (int n = 1; n <= 7; ++n) {
    std::set<std::string> images;
    auto forests = enumerate_marked_forests(n);
    for (const auto& f : forests) images.insert(marked_to_triple(f).str());
    CHECK(images.size() == forests.size());
  }
}

TEST_CASE("forest counts match the Catalan numbers") {
  for (int n = 1; n <= 10; ++n) CHECK(count_forests(n) == catalan(n));
  // enumeration agrees: marked forests counted with multiplicity of marks
  for (int n = 1; n <= 7; ++n) {
    std::map<std::string, int> forests;
    for (const auto& f : enumerate_marked_forests(n)) {
      std::string key;
      for (const auto& t : f.trees) key += t.str() + " ";
      forests[key]++;
    }
    BigInt distinct(forests.size());
    CHECK(distinct == catalan(n));
  }
}
