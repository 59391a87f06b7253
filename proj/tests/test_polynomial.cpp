#include <catch2/catch_amalgamated.hpp>

#include "thompson/polynomial.hpp"
#include "thompson/tree.hpp"

using namespace thompson;

TEST_CASE("phi polynomials") {
  CHECK(phi_poly(0).str() == "x");
  CHECK(phi_poly(1).str() == "x + x^2");
  CHECK(phi_poly(2).str() == "x + x^2 + 2*x^3 + x^4");
  CHECK(phi_poly(3).degree() == 8);

  // coefficient of x^n counts trees of height <= k with n leaves
  for (int k = 0; k <= 4; ++k) {
    BigPoly p = phi_poly(k);
    for (int n = 1; n <= 12; ++n)
      CHECK(p.coefficient(static_cast<std::size_t>(n)) == count_trees(n, k));
  }
}

TEST_CASE("phi evaluation matches the expanded polynomial") {
  for (int k = 0; k <= 6; ++k) {
    BigPoly p = phi_poly(k);
    for (int num = 0; num <= 8; ++num) {
      Rational x(num, 7);
      CHECK(phi_eval(k, x) == p.eval(x));
    }
  }
}

TEST_CASE("xi roots") {
  auto r0 = xi_root(0, Rational(1, 1000));
  CHECK(r0.exact);
  CHECK(r0.lo == 1);

  auto r1 = xi_root(1, Rational(1, 1'000'000));
  CHECK(r1.width() <= Rational(1, 1'000'000));
  // (sqrt(5)-1)/2 lies inside: q is below the root iff q + q^2 < 1
  CHECK(r1.lo + r1.lo * r1.lo < 1);
  CHECK(r1.hi + r1.hi * r1.hi >= 1);
  CHECK(r1.lo >= Rational(6180, 10000));
  CHECK(r1.hi <= Rational(6181, 10000));

  // strictly decreasing, bounded below by 1/4
  Rational tol(1, BigInt("1000000000000000"));
  RootBracket prev = xi_root(0, tol);
  for (int k = 1; k <= 10; ++k) {
    RootBracket cur = xi_root(k, tol);
    CHECK(cur.hi < prev.lo);
    CHECK(phi_eval(k, Rational(1, 4)) < 1);  // certifies xi_k > 1/4
    prev = cur;
  }
}
