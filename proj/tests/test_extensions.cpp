#include <doctest.h>

#include <stdexcept>

#include "rinehart/extensions.hpp"
#include "rinehart/presets.hpp"

using namespace rinehart;

TEST_CASE("the assembled total algebra places vertical generators first") {
  ExtensionData ext = presets::heisenberg_extension();
  LieRinehartPresentation total = build_total(ext);
  REQUIRE(total.fiber_dim() == 3);
  CHECK(total.l_basis[0] == fiber_var("c"));
  CHECK(total.l_basis[1] == fiber_var("e1"));
  CHECK(total.l_basis[2] == fiber_var("e2"));
  // Vertical part carries no anchor; the quotient rows survive unchanged.
  CHECK(total.anchor[0][0].is_zero());
  CHECK(total.anchor[1][0] == Poly::one());
  CHECK(total.anchor[2][1] == Poly::one());
  // The twist lands in the vertical component of the quotient bracket.
  CHECK(total.structure[1][2][0] == Poly::one());
  CHECK(total.structure[2][1][0] == -Poly::one());
  CHECK(check_axioms(total).ok());
}

TEST_CASE("every shipped extension satisfies the structural identities") {
  for (auto ext : {presets::heisenberg_extension(), presets::direct_product_extension(),
                   presets::atiyah_shadow(), presets::closed_curvature_rank_two(),
                   presets::nonclosed_curvature_mutant()}) {
    SampleRng rng(11);
    ExtensionIdentitiesReport report = check_extension_identities(ext, rng, 8);
    for (const IdentityCheck& check : report.checks) {
      INFO(ext.name, ": ", check.name, " ", check.witness);
      CHECK(check.ok);
    }
  }
}

TEST_CASE("a curvature with nonvanishing differential breaks Jacobi upstairs") {
  LieRinehartPresentation total = build_total(presets::nonclosed_curvature_mutant());
  AxiomReport report = check_axioms(total);
  CHECK_FALSE(report.jacobi_ok);
  REQUIRE(report.jacobi_witness.has_value());
  CHECK(report.jacobi_witness->indices == std::vector<std::size_t>{2, 3, 4});
  CHECK(report.jacobi_witness->defect == Poly::variable(fiber_var("c")));
}

TEST_CASE("rank-two twists are automatically closed: the total still passes") {
  LieRinehartPresentation total = build_total(presets::closed_curvature_rank_two());
  CHECK(check_axioms(total).ok());
}

TEST_CASE("curvature extraction recovers the declared twist exactly") {
  for (auto ext : {presets::heisenberg_extension(), presets::direct_product_extension(),
                   presets::atiyah_shadow(), presets::closed_curvature_rank_two()}) {
    LieRinehartPresentation total = build_total(ext);
    ConnectionMap conn = canonical_inclusion(
        total, canonical_split(ext.l_prime.fiber_dim(), total.fiber_dim()));
    CHECK(curvature_of(total, conn) == ext.omega);
  }
}

TEST_CASE("splitting the total algebra reproduces all four constituents") {
  for (auto ext : {presets::heisenberg_extension(), presets::direct_product_extension(),
                   presets::atiyah_shadow(), presets::closed_curvature_rank_two()}) {
    LieRinehartPresentation total = build_total(ext);
    ConnectionMap conn = canonical_inclusion(
        total, canonical_split(ext.l_prime.fiber_dim(), total.fiber_dim()));
    ExtensionData rebuilt = reconstruct_extension(total, conn);
    CHECK(rebuilt.l_prime == ext.l_prime);
    CHECK(rebuilt.l_double_prime == ext.l_double_prime);
    CHECK(rebuilt.nabla == ext.nabla);
    CHECK(rebuilt.omega == ext.omega);
    CHECK(build_total(rebuilt) == total);
  }
}

TEST_CASE("extension construction rejects malformed data") {
  ExtensionData ext = presets::heisenberg_extension();

  SUBCASE("twist tensors must be alternating") {
    ext.omega[0][0][0] = Poly::one();
    CHECK_THROWS_AS(validate_extension(ext), std::invalid_argument);
  }
  SUBCASE("vertical generators must have a zero anchor") {
    ext.l_prime.anchor[0][0] = Poly::one();
    CHECK_THROWS_AS(validate_extension(ext), std::invalid_argument);
  }
  SUBCASE("both constituents must share the base variables") {
    ext.l_prime.base_vars = {base_var("zz"), base_var("x2")};
    CHECK_THROWS_AS(validate_extension(ext), std::invalid_argument);
  }
  SUBCASE("twist entries may not involve fiber variables") {
    ext.omega[0][1][0] = Poly::variable(fiber_var("c"));
    ext.omega[1][0][0] = -ext.omega[0][1][0];
    CHECK_THROWS_AS(validate_extension(ext), std::invalid_argument);
  }
}

TEST_CASE("split validation enforces the vertical and section conditions") {
  LieRinehartPresentation total = build_total(presets::heisenberg_extension());

  ConnectionMap good = canonical_inclusion(total, canonical_split(1, 3));
  validate_split(total, good);

  SUBCASE("a vertical generator with an anchor is rejected") {
    BasisSplit wrong;
    wrong.prime = {1};
    wrong.double_prime = {0, 2};
    CHECK_THROWS_AS(validate_split(total, canonical_inclusion(total, wrong)),
                    std::invalid_argument);
  }
  SUBCASE("indices must partition the generator set") {
    BasisSplit wrong;
    wrong.prime = {0};
    wrong.double_prime = {2};
    CHECK_THROWS_AS(validate_split(total, canonical_inclusion(total, wrong)),
                    std::invalid_argument);
  }
}

TEST_CASE("the trivial twist yields a direct product and zero curvature") {
  ExtensionData ext = presets::direct_product_extension();
  LieRinehartPresentation total = build_total(ext);
  CHECK(check_axioms(total).ok());
  for (const auto& row : ext.omega) {
    for (const auto& cell : row) {
      for (const Poly& entry : cell) CHECK(entry.is_zero());
    }
  }
}
