#include <doctest.h>

#include "rinehart/dsl.hpp"
#include "rinehart/presets.hpp"

using namespace rinehart;

namespace {
DslDocument parse_ok(const std::string& text) {
  ParseResult result = parse_document(text);
  if (!result.document) {
    for (const auto& d : result.diagnostics) {
      MESSAGE(d.render("<input>"));
    }
  }
  REQUIRE(result.document.has_value());
  return std::move(*result.document);
}

Diagnostic parse_err(const std::string& text) {
  ParseResult result = parse_document(text);
  REQUIRE_FALSE(result.document.has_value());
  REQUIRE_FALSE(result.diagnostics.empty());
  return result.diagnostics.front();
}
}  // namespace

TEST_CASE("a declared rotation algebra matches the built-in construction") {
  DslDocument doc = parse_ok(R"(
# Three rotations, cyclic brackets, no base ring.
algebra so3 {
  basis e1, e2, e3;
  bracket [e1, e2] = e3;
  bracket [e2, e3] = e1;
  bracket [e3, e1] = e2;
}
)");
  auto pres = doc.find_algebra("so3");
  REQUIRE(pres);
  CHECK(*pres == presets::so3());
}

TEST_CASE("anchors are declared against direction symbols for each base variable") {
  DslDocument doc = parse_ok(R"(
algebra twisted {
  base x, y;
  basis e;
  anchor e -> 3/2*y*dx - x^2*dy;
}
)");
  auto pres = doc.find_algebra("twisted");
  REQUIRE(pres);
  Var x = base_var("x"), y = base_var("y");
  CHECK(pres->anchor[0][0] == make_rational(3, 2) * Poly::variable(y));
  CHECK(pres->anchor[0][1] == -Poly::variable(x).pow(2));
}

TEST_CASE("expression parsing honors precedence, parentheses, and unary minus") {
  std::map<std::string, Var> env{{"x", base_var("x")}, {"y", base_var("y")}};
  Poly x = Poly::variable(base_var("x"));
  Poly y = Poly::variable(base_var("y"));
  CHECK(parse_poly_expression("x + y*x", env) == x + y * x);
  CHECK(parse_poly_expression("(x + y)*x", env) == (x + y) * x);
  CHECK(parse_poly_expression("-x^2", env) == -(x.pow(2)));
  CHECK(parse_poly_expression("2/3*x - -y", env) == make_rational(2, 3) * x + y);
  CHECK(parse_poly_expression("x*(x*(x - 1) + 1)", env) ==
        x * (x * (x - Poly::one()) + Poly::one()));
}

TEST_CASE("diagnostics carry the exact source position") {
  Diagnostic d = parse_err("algebra a {\n  basis e1;\n  bracket [e1, e9] = e1;\n}\n");
  CHECK(d.line == 3);
  CHECK(d.col == 16);
  CHECK(d.message.find("e9") != std::string::npos);

  Diagnostic brace = parse_err("algebra a {\n  basis e1;\n");
  CHECK(brace.line == 3);
  CHECK_FALSE(brace.expected.empty());
}

TEST_CASE("semantic rules are enforced at parse time") {
  SUBCASE("duplicate declaration names") {
    Diagnostic d = parse_err(
        "algebra a { basis e1; }\nalgebra a { basis e2; }\n");
    CHECK(d.line == 2);
    CHECK(d.message.find("a") != std::string::npos);
  }
  SUBCASE("anchors must be linear in the direction symbols") {
    Diagnostic d = parse_err(
        "algebra a {\n  base x;\n  basis e;\n  anchor e -> dx*dx;\n}\n");
    CHECK(d.line == 4);
  }
  SUBCASE("bracket values must be linear in the generators") {
    Diagnostic d = parse_err(
        "algebra a {\n  basis e1, e2;\n  bracket [e1, e2] = e1*e1;\n}\n");
    CHECK(d.line == 3);
  }
  SUBCASE("exponents are capped") {
    parse_err("algebra a {\n  base x;\n  basis e;\n  anchor e -> x^5000*dx;\n}\n");
  }
  SUBCASE("conflicting duplicate brackets are rejected") {
    Diagnostic d = parse_err(
        "algebra a {\n  basis e1, e2;\n  bracket [e1, e2] = e1;\n"
        "  bracket [e2, e1] = e1;\n}\n");
    CHECK(d.line == 4);
  }
  SUBCASE("scene bounds") {
    parse_err("scene sc { s = 0; l = 1; }\n");
    parse_err("scene sc { s = 1; l = 17; }\n");
  }
}

TEST_CASE("extensions parse with antisymmetric twist completion") {
  DslDocument doc = parse_ok(R"(
extension heis {
  base x1, x2;
  lprime { basis c; }
  ldoubleprime {
    basis e1, e2;
    anchor e1 -> dx1;
    anchor e2 -> dx2;
  }
  omega { [e1, e2] = c; }
}
)");
  auto ext = doc.find_extension("heis");
  REQUIRE(ext);
  CHECK(ext->omega[0][1][0] == Poly::one());
  CHECK(ext->omega[1][0][0] == -Poly::one());
  CHECK(ext->l_prime.fiber_dim() == 1);
  CHECK(ext->l_double_prime.fiber_dim() == 2);
}

TEST_CASE("connection blocks pair quotient generators with vertical ones") {
  DslDocument doc = parse_ok(R"(
extension twisted {
  base x;
  lprime { basis c; }
  ldoubleprime {
    basis e;
    anchor e -> dx;
  }
  nabla { [e, c] = x*c; }
}
)");
  auto ext = doc.find_extension("twisted");
  REQUIRE(ext);
  CHECK(ext->nabla[0][0][0] == Poly::variable(base_var("x")));
}

TEST_CASE("command statements are collected in order with their arguments") {
  DslDocument doc = parse_ok(R"(
algebra a { basis e1; }
check a;
bracket a "e1" "e1";
reconstruct a;
)");
  REQUIRE(doc.commands.size() == 3);
  CHECK(doc.commands[0].verb == "check");
  CHECK(doc.commands[0].target == "a");
  CHECK(doc.commands[1].verb == "bracket");
  REQUIRE(doc.commands[1].args.size() == 2);
  CHECK(doc.commands[1].args[0] == "e1");
  CHECK(doc.commands[2].verb == "reconstruct");

  parse_err("algebra a { basis e1; }\nfrobnicate a;\n");
  parse_err("algebra a { basis e1; }\nbracket a \"e1\";\n");
}

TEST_CASE("brackets may carry base-variable coefficients") {
  DslDocument doc = parse_ok(R"(
algebra affine {
  base x;
  basis e1, e2;
  bracket [e1, e2] = x*e1;
}
)");
  auto pres = doc.find_algebra("affine");
  REQUIRE(pres);
  CHECK(pres->structure[0][1][0] == Poly::variable(base_var("x")));
  CHECK(pres->structure[1][0][0] == -Poly::variable(base_var("x")));
}

TEST_CASE("rendered polynomials parse back to the same polynomial") {
  std::map<std::string, Var> env{
      {"x", base_var("x")}, {"y", base_var("y")}, {"e1", fiber_var("e1")}};
  Poly x = Poly::variable(base_var("x"));
  Poly y = Poly::variable(base_var("y"));
  Poly e1 = Poly::variable(fiber_var("e1"));
  std::vector<Poly> cases{
      make_rational(3, 2) * x.pow(2) + x * e1 + y,
      -x + Poly::one(),
      x * y * e1 - make_rational(7, 3) * e1,
      Poly::zero(),
      Poly::constant(make_rational(-5, 4)),
  };
  for (const Poly& p : cases) {
    CHECK(parse_poly_expression(p.to_string(), env) == p);
  }
}

TEST_CASE("comments and blank lines are ignored everywhere") {
  DslDocument doc = parse_ok(
      "# leading comment\n\nalgebra a { # trailing\n  basis e1; # here too\n}\n");
  CHECK(doc.find_algebra("a"));
}

TEST_CASE("scenes record their two size parameters") {
  DslDocument doc = parse_ok("scene pairs { s = 2; l = 3; }\n");
  auto scene = doc.find_scene("pairs");
  REQUIRE(scene);
  CHECK(scene->s == 2);
  CHECK(scene->l == 3);
}
