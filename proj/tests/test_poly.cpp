#include <doctest.h>

#include "rinehart/poly.hpp"

using namespace rinehart;

namespace {
const Var x = base_var("x");
const Var y = base_var("y");
const Var e1 = fiber_var("e1");
const Var e2 = fiber_var("e2");

Poly px() { return Poly::variable(x); }
Poly py() { return Poly::variable(y); }
Poly pe1() { return Poly::variable(e1); }
Poly pe2() { return Poly::variable(e2); }
}  // namespace

TEST_CASE("monomials multiply and divide exactly") {
  Monomial m = Monomial::of(x, 2) * Monomial::of(e1);
  CHECK(m.degree() == 3);
  CHECK(m.degree(VarKind::base) == 2);
  CHECK(m.degree(VarKind::fiber) == 1);
  CHECK(m.exponent(x) == 2);
  CHECK(m.exponent(y) == 0);
  Monomial quotient = m.divided_by(x);
  CHECK(quotient.exponent(x) == 1);
  CHECK(quotient.exponent(e1) == 1);
  CHECK_THROWS_AS(m.divided_by(y), std::invalid_argument);
}

TEST_CASE("string form is canonical: graded term order, base factors first") {
  Poly p = px() * px() * make_rational(3, 2) + py() + pe1() * px();
  CHECK(p.to_string() == "3/2*x^2 + x*e1 + y");
  CHECK(Poly::zero().to_string() == "0");
  CHECK((Poly::one() - Poly::one()).to_string() == "0");
  CHECK((Poly::constant(make_rational(-1)) * px()).to_string() == "-x");
}

TEST_CASE("ring identities hold exactly") {
  Poly a = px() + py();
  CHECK(a * a == px() * px() + make_rational(2) * px() * py() + py() * py());
  CHECK(a.pow(3) == a * a * a);
  CHECK((a - a).is_zero());
  CHECK(a * Poly::zero() == Poly::zero());
  CHECK(a * Poly::one() == a);
}

TEST_CASE("partial derivatives follow the product rule") {
  Poly p = px().pow(3) * pe1() + py() * pe1() * pe2();
  CHECK(p.partial(x) == make_rational(3) * px().pow(2) * pe1());
  CHECK(p.partial(e1) == px().pow(3) + py() * pe2());
  CHECK(p.partial(e2) == py() * pe1());
  CHECK(Poly::constant(make_rational(5)).partial(x).is_zero());
}

TEST_CASE("grading by variable kind filters fiber degree") {
  Poly p = px() + pe1() * px() + pe1() * pe2() + pe2().pow(2) * py();
  CHECK(p.fiber_degree_part(0) == px());
  CHECK(p.fiber_degree_part(1) == pe1() * px());
  CHECK(p.fiber_degree_part(2) == pe1() * pe2() + pe2().pow(2) * py());
  CHECK(p.degree(VarKind::fiber) == 2);
  CHECK(p.uses(VarKind::fiber));
  CHECK_FALSE(px().uses(VarKind::fiber));
}

TEST_CASE("evaluation and substitution are ring morphisms") {
  Poly p = px().pow(2) + py() * pe1();
  std::map<Var, Rational> point{{x, make_rational(2)}, {y, make_rational(3)},
                                {e1, make_rational(1, 2)}};
  CHECK(p.evaluate(point) == make_rational(11, 2));

  std::map<Var, Poly> sub{{x, py()}, {e1, px() + py()}};
  CHECK(p.substitute(sub) == py().pow(2) + py() * (px() + py()));
}

TEST_CASE("coefficient lookup works against the canonical term map") {
  Poly p = make_rational(3, 2) * px() * pe1() - py();
  CHECK(p.coefficient(Monomial::of(x) * Monomial::of(e1)) == make_rational(3, 2));
  CHECK(p.coefficient(Monomial::of(y)) == make_rational(-1));
  CHECK(p.coefficient(Monomial::one()) == 0);
}
