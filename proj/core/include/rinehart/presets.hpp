#pragma once

#include "rinehart/extensions.hpp"
#include "rinehart/lie_rinehart.hpp"
#include "rinehart/reductive.hpp"

namespace rinehart {
namespace presets {

/// ℚ[x] with one generator acting by d/dx.
LieRinehartPresentation vect_line();

/// ℚ[x, y] with one generator acting by y·∂/∂x − x·∂/∂y.
LieRinehartPresentation rotation_plane();

/// Three constant-anchor-free generators with the alternating structure
/// [e1,e2] = e3, [e2,e3] = e1, [e3,e1] = e2.
LieRinehartPresentation so3();

/// so3 with [e1,e2] corrupted to e1: the Jacobi law fails at (1, 2, 3).
LieRinehartPresentation so3_mutant();

/// Two commuting generators over ℚ[x1, x2] with anchors ∂/∂x1 and x1·∂/∂x1;
/// the anchor fails to be a bracket morphism at (1, 2).
LieRinehartPresentation anchor_mutant();

/// One central vertical generator over ℚ[x1, x2], quotient generators with
/// anchors ∂/∂x1 and ∂/∂x2, zero connection, curvature [e1, e2] ↦ c.
ExtensionData heisenberg_extension();

/// Same constituents with zero curvature: the total is a direct product.
ExtensionData direct_product_extension();

/// Vertical so3 copy with zero anchor over ℚ[x1, x2], quotient generated by
/// the coordinate derivations, zero connection and curvature.
ExtensionData atiyah_shadow();

/// Three quotient generators with anchors ∂/∂x1, ∂/∂x2, ∂/∂x3 and a central
/// vertical generator; the curvature [e1, e2] ↦ x3·c has a nonvanishing
/// derivative in the third anchor direction, so the assembled total violates
/// the Jacobi law at (1, 2, 3) — curvature two-forms must be closed.
ExtensionData nonclosed_curvature_mutant();

/// Rank-two quotient version with curvature [e1, e2] ↦ x1·c. Every two-form
/// on two generators has a vanishing alternating three-fold sum, so this
/// total still satisfies the Jacobi law; kept as a regression witness.
ExtensionData closed_curvature_rank_two();

/// so(3) against its rotation subalgebra: h = span(e3), q = span(e1, e2).
ReductivePair so3_so2();

/// The double g ⊕ g for g = so(3), split along the diagonal h and the
/// antidiagonal q.
ReductivePair double_so3();

/// The two-dimensional nonabelian algebra [t, n] = n with h = span(n),
/// q = span(t): [h, q] escapes q, so the pair is not reductive.
ReductivePair borel_pair();

}  // namespace presets
}  // namespace rinehart
