#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rinehart/lie_rinehart.hpp"
#include "rinehart/rng.hpp"
#include "rinehart/tautological.hpp"

namespace rinehart {

/// The data of a two-step assembly: an anchorless algebra of vertical
/// generators, a quotient-side algebra over the same base, a connection
/// tensor recording how quotient generators act on vertical ones, and an
/// alternating curvature tensor valued in the vertical generators.
struct ExtensionData {
  std::string name;
  LieRinehartPresentation l_prime;         ///< anchor identically zero
  LieRinehartPresentation l_double_prime;  ///< same base variables
  /// nabla[j][k][i]: coefficient of e'_i in the action of e''_j on e'_k.
  std::vector<std::vector<std::vector<Poly>>> nabla;
  /// omega[j][k][i]: coefficient of e'_i in the curvature of (e''_j, e''_k);
  /// alternating in (j, k).
  std::vector<std::vector<std::vector<Poly>>> omega;
};

/// Checks shapes, the shared base, the zero anchor on the vertical side, the
/// alternating law for omega, and base-only tensor entries. Throws
/// std::invalid_argument on the first violation.
void validate_extension(const ExtensionData& ext);

/// Assembles the total presentation on the concatenated generator list
/// (vertical generators first): vertical brackets and zero anchor rows from
/// l_prime, quotient brackets corrected by omega, mixed brackets from nabla.
LieRinehartPresentation build_total(const ExtensionData& ext);

/// A declared splitting of a total presentation's generator list into a
/// vertical part and a quotient part.
struct BasisSplit {
  std::vector<std::size_t> prime;         ///< indices of vertical generators
  std::vector<std::size_t> double_prime;  ///< indices of quotient generators
};

BasisSplit canonical_split(std::size_t prime_count, std::size_t total_count);

/// A section of the projection onto the quotient part: row j lists the
/// coefficients of the lift of the j-th quotient generator over the full
/// generator list. The quotient block must be the identity.
struct ConnectionMap {
  BasisSplit split;
  std::vector<std::vector<Poly>> section;
};

ConnectionMap canonical_inclusion(const LieRinehartPresentation& total, BasisSplit split);

/// Throws std::invalid_argument unless the split partitions the generators,
/// the vertical generators have zero anchor rows, the vertical span is closed
/// under bracketing with everything (so the quotient bracket is defined), and
/// the section's quotient block is the identity.
void validate_split(const LieRinehartPresentation& total, const ConnectionMap& conn);

/// Curvature of the section: for quotient generators f_j, f_k,
///   Ω(f_j, f_k) = [σ f_j, σ f_k] − σ([f_j, f_k])
/// computed with the bracket engine of the total presentation and returned as
/// an alternating tensor over the vertical generators. The defect lands in
/// the vertical span precisely because the split passes validate_split; a
/// split whose vertical part is not closed is rejected there.
std::vector<std::vector<std::vector<Poly>>> curvature_of(const LieRinehartPresentation& total,
                                                         const ConnectionMap& conn);

/// Splits a total presentation back into extension data: reads the bracket
/// off the element algebra through reconstruct(), then slices the recovered
/// anchor and structure along the split. With the canonical split this
/// round-trips build_total exactly.
ExtensionData reconstruct_extension(const LieRinehartPresentation& total,
                                    const ConnectionMap& conn);

struct IdentityCheck {
  std::string name;
  bool ok = true;
  std::string witness;
};

struct ExtensionIdentitiesReport {
  std::vector<IdentityCheck> checks;
  bool ok() const {
    for (const auto& c : checks) {
      if (!c.ok) return false;
    }
    return true;
  }
};

/// Verifies, with the bracket engine over the assembled total, that
///   - vertical × vertical brackets reproduce the vertical structure,
///   - quotient × quotient brackets reproduce the quotient structure plus
///     the curvature correction,
///   - quotient × vertical brackets reproduce the connection tensor,
///   - quotient generators act on base elements through their anchors,
///   - vertical generators kill base elements,
///   - the Leibniz rule holds on seeded random samples.
ExtensionIdentitiesReport check_extension_identities(const ExtensionData& ext, SampleRng& rng,
                                                     std::size_t samples);

}  // namespace rinehart
