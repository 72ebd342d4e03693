#include <doctest.h>

#include <memory>

#include "rinehart/kaehler.hpp"
#include "rinehart/presets.hpp"
#include "rinehart/tautological.hpp"

using namespace rinehart;

namespace {
PoissonPresentation so3_poisson() {
  auto ctx = std::make_shared<const LieRinehartPresentation>(presets::so3());
  return poisson_presentation_of(ctx);
}
}  // namespace

TEST_CASE("the derived generator table matches the defining brackets") {
  auto ctx = std::make_shared<const LieRinehartPresentation>(presets::rotation_plane());
  PoissonPresentation pp = poisson_presentation_of(ctx);
  REQUIRE(pp.generators.size() == 3);  // x, y, then e
  CHECK(pp.generators[0] == base_var("x"));
  CHECK(pp.generators[2] == fiber_var("e"));
  CHECK(pp.table[0][1].is_zero());
  CHECK(pp.table[2][0] == Poly::variable(base_var("y")));
  CHECK(pp.table[2][1] == -Poly::variable(base_var("x")));
  CHECK(pp.table[0][2] == -pp.table[2][0]);
  validate_poisson_presentation(pp);
}

TEST_CASE("the biderivation bracket extends the table through products") {
  PoissonPresentation pp = so3_poisson();
  Poly e1 = Poly::variable(fiber_var("e1"));
  Poly e2 = Poly::variable(fiber_var("e2"));
  Poly e3 = Poly::variable(fiber_var("e3"));
  CHECK(pp.bracket(e1, e2) == e3);
  CHECK(pp.bracket(e1 * e1, e2) == make_rational(2) * e1 * e3);
  CHECK(pp.bracket(e1, e1).is_zero());
  CHECK(pp.bracket(e1 * e2, e3) == e1 * pp.bracket(e2, e3) + pp.bracket(e1, e3) * e2);
}

TEST_CASE("differentials follow the Leibniz rule coefficientwise") {
  PoissonPresentation pp = so3_poisson();
  Poly e1 = Poly::variable(fiber_var("e1"));
  Poly e2 = Poly::variable(fiber_var("e2"));
  DifferentialElement d = differential_of(pp, e1 * e2);
  CHECK(d.coeff[0] == e2);
  CHECK(d.coeff[1] == e1);
  CHECK(d.coeff[2].is_zero());
  CHECK(differential_of(pp, Poly::one()) == zero_differential(pp));
}

TEST_CASE("the bracket of exact differentials is the differential of the bracket") {
  PoissonPresentation pp = so3_poisson();
  Poly e1 = Poly::variable(fiber_var("e1"));
  Poly e2 = Poly::variable(fiber_var("e2"));
  DifferentialElement lhs = kaehler_bracket(pp, differential_of(pp, e1),
                                            differential_of(pp, e2));
  CHECK(lhs == differential_of(pp, pp.bracket(e1, e2)));
}

TEST_CASE("the induced vector field acts by bracketing") {
  PoissonPresentation pp = so3_poisson();
  Poly e1 = Poly::variable(fiber_var("e1"));
  Poly e2 = Poly::variable(fiber_var("e2"));
  Poly e3 = Poly::variable(fiber_var("e3"));
  Derivation field = pi_sharp(pp, differential_of(pp, e1));
  CHECK(field.apply(e2) == pp.bracket(e1, e2));
  CHECK(field.apply(e2 * e3) == pp.bracket(e1, e2 * e3));
}

TEST_CASE("the anchor-to-fields map respects brackets on every valid preset") {
  for (auto pres : {presets::vect_line(), presets::rotation_plane(), presets::so3()}) {
    auto ctx = std::make_shared<const LieRinehartPresentation>(std::move(pres));
    MorphismReport report = check_pi_sharp_morphism(poisson_presentation_of(ctx));
    CHECK(report.ok);
    CHECK(report.pairs_checked > 0);
  }
}

TEST_CASE("a table that violates Jacobi fails the morphism check with a witness") {
  PoissonPresentation pp = so3_poisson();
  // Redirect {e1,e2} from e3 to e1; antisymmetry survives, Jacobi does not.
  Poly e1 = Poly::variable(fiber_var("e1"));
  pp.table[0][1] = e1;
  pp.table[1][0] = -e1;
  validate_poisson_presentation(pp);
  MorphismReport report = check_pi_sharp_morphism(pp);
  CHECK_FALSE(report.ok);
  REQUIRE(report.witness.has_value());
  CHECK_FALSE(report.witness->defect.is_zero());
}

TEST_CASE("differential elements form a module with exact equality") {
  PoissonPresentation pp = so3_poisson();
  Poly e1 = Poly::variable(fiber_var("e1"));
  DifferentialElement a = differential_of(pp, e1 * e1);
  DifferentialElement b = differential_of(pp, e1);
  CHECK(a.coeff[0] == make_rational(2) * e1);
  CHECK_FALSE(a == b);
}
