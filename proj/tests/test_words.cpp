#include <catch2/catch_amalgamated.hpp>

#include "thompson/words.hpp"

using namespace thompson;

TEST_CASE("word parsing and printing round-trip") {
  CHECK(to_string(parse_word("x0^-1 x1 x0")) == "x0^-1 x1 x0");
  CHECK(parse_word("1").empty());
  CHECK(parse_word("").empty());
  CHECK(to_string(GroupWord{}) == "1");
  CHECK_THROWS(parse_word("y0"));
  CHECK_THROWS(parse_word("x0^2"));
  CHECK_THROWS(parse_word("x"));
}

TEST_CASE("free reduction") {
  CHECK(free_reduce(parse_word("x0 x0^-1")).empty());
  CHECK(to_string(free_reduce(parse_word("x1 x0 x0^-1 x1"))) == "x1 x1");
  GroupWord already = parse_word("x0 x1 x0^-1");
  CHECK(free_reduce(already) == already);
}

TEST_CASE("exponent sums") {
  auto s = exponent_sums(parse_word("x0 x0 x1^-1"));
  CHECK(s[0] == 2);
  CHECK(s[1] == -1);
  CHECK(exponent_sums({}).empty());

  auto z = exponent_sums(parse_word("x0^-1 x0^-1 x1 x0 x0 x1^-1 x0^-1 x1^-1 x0 x1"));
  CHECK(z.at(0) == 0);
  CHECK(z.at(1) == 0);
}

TEST_CASE("word combinators") {
  GroupWord a = parse_word("x0 x1");
  CHECK(to_string(inverse(a)) == "x1^-1 x0^-1");
  CHECK(free_reduce(concat(a, inverse(a))).empty());
  CHECK(to_string(conjugate(parse_word("x1"), parse_word("x0"))) == "x0^-1 x1 x0");
  CHECK(to_string(word_power(parse_word("x0"), -2)) == "x0^-1 x0^-1");
}

TEST_CASE("expansion to the two-letter alphabet") {
  CHECK(to_string(expand_to_two_letters(parse_word("x2"))) == "x0^-1 x1 x0");
  CHECK(to_string(expand_to_two_letters(parse_word("x3^-1"))) ==
        "x0^-1 x0^-1 x1^-1 x0 x0");
  GroupWord small = parse_word("x0 x1^-1");
  CHECK(expand_to_two_letters(small) == small);
}
