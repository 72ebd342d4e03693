#include <doctest.h>

#include "rinehart/rational.hpp"

using namespace rinehart;

TEST_CASE("parsing accepts integers and fractions in lowest or unreduced terms") {
  CHECK(parse_rational("7") == make_rational(7));
  CHECK(parse_rational("-7") == make_rational(-7));
  CHECK(parse_rational("3/2") == make_rational(3, 2));
  CHECK(parse_rational("4/6") == make_rational(2, 3));
  CHECK(parse_rational("-4/6") == make_rational(-2, 3));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("construction canonicalizes signs and common factors") {
  CHECK(to_string(make_rational(4, -6)) == "-2/3");
  CHECK(to_string(make_rational(-4, -6)) == "2/3");
  CHECK(to_string(make_rational(0, 5)) == "0");
  CHECK(to_string(make_rational(9, 3)) == "3");
}

TEST_CASE("arithmetic stays exact far beyond machine precision") {
  Rational big = rational_pow(make_rational(10), 30);
  Rational tiny = make_rational(1, 3);
  CHECK(big + tiny - big == tiny);
  CHECK(rational_pow(make_rational(2, 3), 5) == make_rational(32, 243));
  CHECK(rational_pow(make_rational(5), 0) == 1);
}

TEST_CASE("perfect-square detection returns the exact positive root") {
  Rational root;
  CHECK(rational_sqrt(make_rational(9, 4), root));
  CHECK(root == make_rational(3, 2));
  CHECK(rational_sqrt(make_rational(0), root));
  CHECK(root == 0);
  CHECK_FALSE(rational_sqrt(make_rational(2), root));
  CHECK_FALSE(rational_sqrt(make_rational(-4), root));
  CHECK_FALSE(rational_sqrt(make_rational(4, 3), root));
}

TEST_CASE("doubles convert to the exact dyadic rational they denote") {
  CHECK(rational_from_double(0.5) == make_rational(1, 2));
  CHECK(rational_from_double(-0.75) == make_rational(-3, 4));
  CHECK(rational_from_double(3.0) == 3);
  // 0.1 is not a dyadic rational; the nearest double is this exact fraction.
  CHECK(rational_from_double(0.1) ==
        Rational("3602879701896397/36028797018963968"));
  CHECK(to_double(make_rational(1, 2)) == 0.5);
}
