#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lindnet/error.hpp"
#include "lindnet/poly.hpp"
#include "support/generators.hpp"

using namespace lindnet;
using testgen::poly;

TEST_CASE("rational parsing and formatting") {
  CHECK(parse_rational("3") == Rational(3));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(parse_rational("+2/4") == Rational(1, 2));
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-4/2") == Rational(-2));
  CHECK(format_rational(Rational(-2)) == "-2");
  CHECK(format_rational(Rational(5, 10)) == "1/2");
  CHECK(format_rational(Rational(0)) == "0");

  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("abc"), Error);
  CHECK_THROWS_AS(parse_rational("1.5"), Error);
  CHECK_THROWS_AS(parse_rational(""), Error);
  CHECK_THROWS_AS(parse_rational("1/-2"), Error);

  SUBCASE("round trip on randoms") {
    std::mt19937 rng(11);
    for (int k = 0; k < 200; ++k) {
      const Rational r = testgen::random_rational(rng, 1000, 997);
      CHECK(parse_rational(format_rational(r)) == r);
    }
  }
}

TEST_CASE("degree follows the zero convention") {
  CHECK(poly({1, 2, 0, 1}).degree() == 3);  // 1 + 2s + s^3
  CHECK(Poly().degree() == kDegMinusInf);
  CHECK(poly({0}).degree() == kDegMinusInf);
  CHECK(kDegMinusInf < -1000000);
}

TEST_CASE("degree is additive under multiplication") {
  const Poly a = poly({1, -1, 2});     // degree 2
  const Poly b = poly({0, 3, 0, -1});  // degree 3
  CHECK((a * b).degree() == 5);

  std::mt19937 rng(5);
  for (int k = 0; k < 50; ++k) {
    const Poly p = testgen::random_poly(rng, 4);
    const Poly q = testgen::random_poly(rng, 4);
    CHECK((p * q).degree() == p.degree() + q.degree());
  }
}

TEST_CASE("normalization strips trailing zeros") {
  CHECK(poly({1, 0, 0}) == poly({1}));
  CHECK(poly({2, 1}) - poly({0, 1}) == poly({2}));
  CHECK((poly({0, 1}) - poly({0, 1})).is_zero());
}

TEST_CASE("polynomial ring identities on randoms") {
  std::mt19937 rng(7);
  for (int k = 0; k < 50; ++k) {
    const Poly a = testgen::random_poly(rng, 3);
    const Poly b = testgen::random_poly(rng, 3);
    const Poly c = testgen::random_poly(rng, 3);
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a * b == b * a);
    CHECK(a + (-a) == Poly());
  }
}

TEST_CASE("monomials and shifts") {
  CHECK(Poly::monomial(Rational(2), 3) == poly({0, 0, 0, 2}));
  CHECK(Poly::monomial(Rational(0), 3).is_zero());
  CHECK(poly({1, 1}).shifted(2) == poly({0, 0, 1, 1}));
  CHECK(Poly::shift() * Poly::shift() == poly({0, 0, 1}));
  CHECK(poly({3}).coeff(0) == 3);
  CHECK(poly({3}).coeff(5) == 0);
}

TEST_CASE("exact division inverts multiplication") {
  std::mt19937 rng(9);
  for (int k = 0; k < 60; ++k) {
    const Poly a = testgen::random_poly(rng, 3);
    const Poly b = testgen::random_poly(rng, 3);
    CHECK(div_exact(a * b, b) == a);
  }
  CHECK_THROWS_AS(div_exact(poly({1, 1}), poly({0, 1})), std::logic_error);
  CHECK_THROWS_AS(div_exact(poly({1}), Poly()), std::logic_error);
  CHECK(div_exact(Poly(), poly({1, 2})).is_zero());
}

TEST_CASE("printing") {
  CHECK(Poly().str() == "0");
  CHECK(poly({1, 0, -2}).str() == "1 - 2*s^2");
  CHECK(poly({0, 1}).str() == "s");
  CHECK(Poly::monomial(Rational(-1, 2), 1).str() == "-1/2*s");
}
