#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rinehart/derivation.hpp"
#include "rinehart/poly.hpp"

namespace rinehart {

/// A Poisson structure on a polynomial algebra, presented by generators and
/// the antisymmetric table of their pairwise brackets. The bracket of two
/// arbitrary polynomials is the biderivation extension
///   {f, g} = Σ_{i,j} ∂f/∂u_i · ∂g/∂u_j · table[i][j].
struct PoissonPresentation {
  std::string name;
  std::vector<Var> generators;
  std::vector<std::vector<Poly>> table;

  Poly bracket(const Poly& f, const Poly& g) const;
  std::optional<std::size_t> generator_index(const Var& v) const;
};

/// Checks table shape, antisymmetry, and that every entry only uses declared
/// generators. Throws std::invalid_argument on the first violation.
void validate_poisson_presentation(const PoissonPresentation& pp);

/// Formal combination Σ_i coeff[i] · du_i of generator differentials with
/// polynomial coefficients, indexed like the presentation's generator list.
struct DifferentialElement {
  std::vector<Poly> coeff;

  friend bool operator==(const DifferentialElement&, const DifferentialElement&) = default;
};

DifferentialElement zero_differential(const PoissonPresentation& pp);

/// d(w) = Σ_i ∂w/∂u_i du_i.
DifferentialElement differential_of(const PoissonPresentation& pp, const Poly& w);

/// The bracket of differentials, defined on decomposables by
///   [a du, b dv] = a{u, b} dv + b{a, v} du + a·b · d{u, v}
/// and extended bilinearly.
DifferentialElement kaehler_bracket(const PoissonPresentation& pp, const DifferentialElement& x,
                                    const DifferentialElement& y);

/// π♯(Σ a_i du_i) is the derivation u_j ↦ Σ_i a_i · {u_i, u_j}.
Derivation pi_sharp(const PoissonPresentation& pp, const DifferentialElement& x);

struct MorphismWitness {
  std::string x_text;
  std::string y_text;
  Var generator;  ///< where the two derivations differ
  Poly defect;
};

struct MorphismReport {
  bool ok = true;
  std::size_t pairs_checked = 0;
  std::optional<MorphismWitness> witness;
};

/// Verifies π♯([x, y]) = [π♯ x, π♯ y] for x = a·du_i, y = b·du_j, with a and b
/// running over 1 and all generators. On generator differentials the identity
/// evaluated at u_l is exactly the Jacobi cyclic sum of the table at
/// (u_i, u_j, u_l), so a corrupted table fails here and a genuine Poisson
/// table passes.
MorphismReport check_pi_sharp_morphism(const PoissonPresentation& pp);

}  // namespace rinehart
