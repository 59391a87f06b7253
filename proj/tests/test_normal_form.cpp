#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "test_util.hpp"
#include "thompson/normal_form.hpp"
#include "thompson/tree_pair.hpp"

using namespace thompson;

TEST_CASE("normal form of simple words") {
  CHECK(nf_from_word(parse_word("x1 x0")).str() == "x0 x2");
  CHECK(nf_from_word(parse_word("x0 x0^-1")).is_identity());
  CHECK(nf_from_word(parse_word("x0^-1 x0")).is_identity());
  CHECK(nf_from_word(parse_word("x0^-1 x1 x0")).str() == "x2");
  CHECK(nf_from_word(parse_word("x1^-1 x0")).str() == "x0 x2^-1");
}

TEST_CASE("the defining relation collapses") {
  // x0^-2 x1 x0^2 x1^-1 x0^-1 x1^-1 x0 x1 is a relator of F
  GroupWord w = parse_word("x0^-1 x0^-1 x1 x0 x0 x1^-1 x0^-1 x1^-1 x0 x1");
  CHECK(nf_from_word(w).is_identity());
}

TEST_CASE("generator as element") {
  CHECK(generator_as_element(0).str() == "x0");
  CHECK(generator_as_element(2) == nf_from_word(parse_word("x0^-1 x1 x0")));
  CHECK(generator_as_element(3) == nf_from_word(parse_word("x0^-1 x0^-1 x1 x0 x0")));
}

TEST_CASE("positivity") {
  CHECK(nf_from_word(parse_word("x1 x0")).is_positive());
  CHECK_FALSE(nf_from_word(parse_word("x0^-1")).is_positive());
  CHECK(NormalForm::identity().is_positive());
}

TEST_CASE("words differing by one relation agree", "[property]") {
  std::mt19937_64 rng(20240811);
  std::uniform_int_distribution<std::uint32_t> iDist(0, 4);
  std::uniform_int_distribution<std::uint32_t> gapDist(1, 3);
  for (int trial = 0; trial < 300; ++trial) {
    GroupWord w = testutil::random_word(rng, 12, 4);
    std::uniform_int_distribution<std::size_t> posDist(0, w.size());
    std::size_t p = posDist(rng);
    std::uint32_t i = iDist(rng), j = i + gapDist(rng);
    // insert x_j x_i on one copy and x_i x_{j+1} on the other
    GroupWord w1 = w, w2 = w;
    w1.insert(w1.begin() + static_cast<std::ptrdiff_t>(p), {x(j), x(i)});
    w2.insert(w2.begin() + static_cast<std::ptrdiff_t>(p), {x(i), x(j + 1)});
    CHECK(nf_from_word(w1) == nf_from_word(w2));
  }
}

TEST_CASE("produced normal forms satisfy the reducedness condition", "[property]") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    auto f = nf_from_word(testutil::random_word(rng, 16, 5));
    // from_parts revalidates both conditions
    CHECK_NOTHROW(NormalForm::from_parts(f.positive(), f.negative()));
  }
}

TEST_CASE("group laws via tree-pair multiplication", "[property]") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    auto a = nf_from_word(testutil::random_word(rng, 10, 4));
    auto b = nf_from_word(testutil::random_word(rng, 10, 4));
    auto c = nf_from_word(testutil::random_word(rng, 10, 4));
    CHECK(multiply(a, invert(a)).is_identity());
    CHECK(multiply(a, NormalForm::identity()) == a);
    CHECK(multiply(NormalForm::identity(), a) == a);
    CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
    CHECK(invert(invert(a)) == a);
    // multiplication agrees with the rewriting route
    CHECK(multiply(a, b) == nf_from_word(concat(a.word(), b.word())));
  }
}

TEST_CASE("single relation checks") {
  GroupWord lhs = conjugate(parse_word("x1"), word_power(parse_word("x0"), 2));
  GroupWord rhs = conjugate(parse_word("x1"), parse_word("x0 x1"));
  CHECK(check_relation(lhs, rhs));
  CHECK_FALSE(check_relation(parse_word("x0"), parse_word("x1")));
}

TEST_CASE("presentation relators and commutations") {
  // relators of the finite presentation
  GroupWord r1 = concat(conjugate(parse_word("x1"), word_power(parse_word("x0"), 2)),
                        inverse(conjugate(parse_word("x1"), parse_word("x0 x1"))));
  GroupWord r2 = concat(conjugate(parse_word("x1"), word_power(parse_word("x0"), 3)),
                        inverse(conjugate(parse_word("x1"), parse_word("x0 x0 x1"))));
  CHECK(is_trivial_word(r1));
  CHECK(is_trivial_word(r2));

  // alpha = x1^-1, beta = (x1 x0^-1)^-1 = x0 x1^-1; alpha^{beta^m} <-> beta^{alpha^n}
  GroupWord alpha = parse_word("x1^-1");
  GroupWord beta = parse_word("x0 x1^-1");
  for (int m = 1; m <= 3; ++m) {
    for (int n = 1; n <= 3; ++n) {
      GroupWord u = conjugate(alpha, word_power(beta, m));
      GroupWord v = conjugate(beta, word_power(alpha, n));
      CHECK(is_trivial_word(commutator(u, v)));
    }
  }
}

TEST_CASE("flip automorphism") {
  GroupWord r1 = concat(conjugate(parse_word("x1"), word_power(parse_word("x0"), 2)),
                        inverse(conjugate(parse_word("x1"), parse_word("x0 x1"))));
  GroupWord r2 = concat(conjugate(parse_word("x1"), word_power(parse_word("x0"), 3)),
                        inverse(conjugate(parse_word("x1"), parse_word("x0 x0 x1"))));
  CHECK(is_trivial_word(flip_automorphism(r1)));
  CHECK(is_trivial_word(flip_automorphism(r2)));

  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 100; ++trial) {
    GroupWord w = testutil::random_word(rng, 10, 3);
    GroupWord twice = flip_automorphism(flip_automorphism(w));
    CHECK(nf_from_word(twice) == nf_from_word(w));
  }
}

TEST_CASE("alternating even/odd words are never trivial", "[property]") {
  std::mt19937_64 rng(5150);
  std::uniform_int_distribution<int> kDist(1, 3);
  std::uniform_int_distribution<std::uint32_t> evenDist(0, 3);  // 2*e
  std::uniform_int_distribution<std::uint32_t> oddDist(0, 2);   // 2*o+1
  std::uniform_int_distribution<int> signDist(0, 1);
  for (int trial = 0; trial < 1000; ++trial) {
    GroupWord w;
    int k = kDist(rng);
    for (int p = 0; p < k; ++p) {
      w.push_back(x(2 * evenDist(rng), signDist(rng) ? 1 : -1));
      w.push_back(x(2 * oddDist(rng) + 1, signDist(rng) ? 1 : -1));
    }
    CHECK_FALSE(is_trivial_word(w));
  }
}
