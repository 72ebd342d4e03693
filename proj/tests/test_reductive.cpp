#include <doctest.h>

#include <stdexcept>

#include "rinehart/presets.hpp"
#include "rinehart/reductive.hpp"

using namespace rinehart;

TEST_CASE("constant-structure algebras validate antisymmetry and Jacobi") {
  ReductivePair pair = presets::so3_so2();
  validate_lie_algebra(pair.g);

  LieAlgebra broken = pair.g;
  broken.structure[0][1][2] = make_rational(2);  // breaks antisymmetry vs [e2,e1]
  CHECK_THROWS_AS(validate_lie_algebra(broken), std::invalid_argument);

  LieAlgebra nonjacobi = pair.g;
  nonjacobi.structure[0][1][2] = make_rational(1);
  nonjacobi.structure[1][0][2] = make_rational(-1);
  nonjacobi.structure[0][1][0] = make_rational(1);  // [e1,e2] = e1 + e3
  nonjacobi.structure[1][0][0] = make_rational(-1);
  CHECK_THROWS_AS(validate_lie_algebra(nonjacobi), std::invalid_argument);
}

TEST_CASE("index sets must partition the algebra") {
  ReductivePair pair = presets::so3_so2();
  CHECK_THROWS_AS(make_reductive_pair("bad", pair.g, {2}, {0}), std::invalid_argument);
  CHECK_THROWS_AS(make_reductive_pair("bad", pair.g, {2, 2}, {0, 1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_reductive_pair("bad", pair.g, {2}, {0, 1, 2}),
                  std::invalid_argument);
}

TEST_CASE("the sphere pair is reductive and its stabilizer action rotates") {
  ReductivePair pair = presets::so3_so2();
  ReductiveReport report = check_reductive(pair);
  CHECK(report.h_subalgebra);
  CHECK(report.h_q_into_q);
  CHECK(report.q_q_into_h);
  CHECK(report.ok());
  CHECK(report.q_invariant_dim == 0);

  RatMatrix action = action_on_q(pair, 0);
  REQUIRE(action.rows() == 2);
  CHECK(action.at(0, 0) == 0);
  CHECK(action.at(0, 1) == -1);
  CHECK(action.at(1, 0) == 1);
  CHECK(action.at(1, 1) == 0);
}

TEST_CASE("the sphere pair sees one quadratic invariant that restriction misses") {
  GapReport gap = homogeneous_invariant_gap(presets::so3_so2(), 4);
  REQUIRE(gap.rows.size() == 5);
  CHECK(gap.q_invariant_dim == 0);

  CHECK(gap.rows[0].invariant_dim == 1);  // constants
  CHECK(gap.rows[0].restricted_dim == 1);
  CHECK(gap.rows[1].invariant_dim == 0);
  CHECK(gap.rows[2].invariant_dim == 1);  // the squared radius
  CHECK(gap.rows[2].restricted_dim == 0);
  CHECK(gap.rows[3].invariant_dim == 0);
  CHECK(gap.rows[4].invariant_dim == 1);  // its square
  CHECK(gap.rows[4].restricted_dim == 0);
  REQUIRE(gap.first_gap_degree.has_value());
  CHECK(*gap.first_gap_degree == 2);
}

TEST_CASE("the diagonal pair inside the product algebra behaves the same way") {
  ReductivePair pair = presets::double_so3();
  ReductiveReport report = check_reductive(pair);
  CHECK(report.ok());
  CHECK(report.q_invariant_dim == 0);

  GapReport gap = homogeneous_invariant_gap(pair, 2);
  REQUIRE(gap.first_gap_degree.has_value());
  CHECK(*gap.first_gap_degree == 2);
  CHECK(gap.rows[2].invariant_dim == 1);
  CHECK(gap.rows[2].restricted_dim == 0);
}

TEST_CASE("the solvable pair fails the stability law with a witness") {
  ReductivePair pair = presets::borel_pair();
  ReductiveReport report = check_reductive(pair);
  CHECK(report.h_subalgebra);
  CHECK_FALSE(report.h_q_into_q);
  CHECK(report.q_q_into_h);
  CHECK_FALSE(report.ok());
  REQUIRE(report.witness.has_value());
  CHECK_FALSE(report.witness->description.empty());

  CHECK_THROWS_AS(homogeneous_invariant_gap(pair, 2), std::invalid_argument);
}
