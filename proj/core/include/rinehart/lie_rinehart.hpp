#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rinehart/derivation.hpp"
#include "rinehart/poly.hpp"

namespace rinehart {

/// c[j][k][i] = coefficient of e_i in [e_j, e_k]; antisymmetric in (j, k),
/// entries polynomials in the base variables only.
using StructureTensor = std::vector<std::vector<std::vector<Poly>>>;

/// Presentation of a pair (A, L): A = ℚ[base_vars], L a free A-module on
/// l_basis, each basis element acting on A through its anchor row, with the
/// bracket of basis elements given by structure functions.
struct LieRinehartPresentation {
  std::string name;
  std::vector<Var> base_vars;  ///< kind base
  std::vector<Var> l_basis;    ///< kind fiber
  /// anchor[j][s] = coefficient of ∂/∂x_s in the action of e_j.
  std::vector<std::vector<Poly>> anchor;
  StructureTensor structure;

  std::size_t base_dim() const { return base_vars.size(); }
  std::size_t fiber_dim() const { return l_basis.size(); }

  /// The action of e_j on the base algebra, as a derivation.
  Derivation anchor_derivation(std::size_t j) const;

  /// [e_j, e_k] written as a fiber-linear polynomial.
  Poly basis_bracket(std::size_t j, std::size_t k) const;

  std::optional<std::size_t> base_index(const Var& v) const;
  std::optional<std::size_t> fiber_index(const Var& v) const;

  /// Structural equality: compares variables, anchor, and structure but not
  /// the display name, so a rebuilt presentation can compare equal to its
  /// source.
  friend bool operator==(const LieRinehartPresentation& a, const LieRinehartPresentation& b) {
    return a.base_vars == b.base_vars && a.l_basis == b.l_basis && a.anchor == b.anchor &&
           a.structure == b.structure;
  }
};

/// Builds a presentation from variable names, filling absent tensor entries
/// with zeros, and validates it.
LieRinehartPresentation make_presentation(std::string name,
                                          const std::vector<std::string>& base_names,
                                          const std::vector<std::string>& fiber_names,
                                          std::vector<std::vector<Poly>> anchor,
                                          StructureTensor structure);

/// Checks shapes, variable kinds, base-only coefficient entries, and
/// antisymmetry of the structure tensor. Throws std::invalid_argument with a
/// description of the first violation.
void validate_presentation(const LieRinehartPresentation& pres);

/// ρ(e_j)(a) for a polynomial over the base variables only; rejects inputs
/// that touch fiber variables.
Poly apply_anchor(const LieRinehartPresentation& pres, std::size_t j, const Poly& a);

/// [e_j, w] for w of fiber degree ≤ 1 with base-only coefficients, expanded
/// through the module Leibniz rule: [e_j, a·e_k + b] = a[e_j,e_k] +
/// ρ(e_j)(a)·e_k + ρ(e_j)(b).
Poly bracket_with_fiber_linear(const LieRinehartPresentation& pres, std::size_t j, const Poly& w);

struct AxiomWitness {
  std::vector<std::size_t> indices;  ///< 1-based indices of the failing tuple
  Poly defect;                       ///< nonzero value that the law requires to vanish
  std::string description;
};

struct AxiomReport {
  bool jacobi_ok = true;
  bool anchor_morphism_ok = true;
  std::optional<AxiomWitness> jacobi_witness;
  std::optional<AxiomWitness> anchor_witness;
  bool ok() const { return jacobi_ok && anchor_morphism_ok; }
};

/// Verifies the two laws that make a presentation a genuine pair:
///   1. the cyclic Jacobi sum of basis brackets vanishes, where the inner
///      bracket is expanded through structure functions and the anchor acts
///      on coefficients;
///   2. the anchor turns brackets into commutators of derivations,
///      ρ([e_j,e_k]) = [ρ(e_j), ρ(e_k)].
/// Basis tuples suffice: once law 2 holds, the Jacobi defect is linear over
/// the base algebra in each slot (replacing one argument by a·w changes the
/// defect by (ρ([u,v]) − [ρ(u),ρ(v)])(a) · w, which law 2 kills), so vanishing
/// on basis elements forces vanishing everywhere. Witnesses report the
/// lexicographically smallest failing index tuple.
AxiomReport check_axioms(const LieRinehartPresentation& pres);

}  // namespace rinehart
