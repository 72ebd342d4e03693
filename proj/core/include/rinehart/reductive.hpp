#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rinehart/ratmat.hpp"

namespace rinehart {

/// Finite-dimensional Lie algebra over ℚ by structure constants:
/// [b_i, b_j] = Σ_k structure[i][j][k] b_k, antisymmetric in (i, j).
struct LieAlgebra {
  std::string name;
  std::vector<std::string> basis_names;
  std::vector<std::vector<std::vector<Rational>>> structure;

  std::size_t dim() const { return basis_names.size(); }
};

/// Checks shape, antisymmetry, and the Jacobi identity. Throws
/// std::invalid_argument on the first violation.
void validate_lie_algebra(const LieAlgebra& g);

/// A decomposition g = h ⊕ q by basis index sets. The action matrices of the
/// h part on the q part are derived from the structure constants.
struct ReductivePair {
  std::string name;
  LieAlgebra g;
  std::vector<std::size_t> h;
  std::vector<std::size_t> q;
};

ReductivePair make_reductive_pair(std::string name, LieAlgebra g, std::vector<std::size_t> h,
                                  std::vector<std::size_t> q);

/// Matrix of ad(b_{h[i]}) restricted and projected to the q part, in the q
/// basis: column k holds the q components of [h_i, q_k].
RatMatrix action_on_q(const ReductivePair& pair, std::size_t i);

struct PairWitness {
  std::size_t i = 0, j = 0, k = 0;  ///< 1-based indices into the g basis
  Rational component;
  std::string description;
};

struct ReductiveReport {
  bool h_subalgebra = true;   ///< [h, h] ⊂ h
  bool h_q_into_q = true;     ///< [h, q] ⊂ q
  bool q_q_into_h = true;     ///< [q, q] ⊂ h
  std::optional<PairWitness> witness;  ///< first violated inclusion
  std::size_t q_invariant_dim = 0;     ///< dim of the h-killed part of q
  bool ok() const { return h_subalgebra && h_q_into_q && q_q_into_h; }
};

/// Verifies the three bracket inclusions on basis pairs and, when the action
/// is defined, computes the dimension of the subspace of q killed by every
/// h generator (the kernel of the stacked action matrices).
ReductiveReport check_reductive(const ReductivePair& pair);

struct GapRow {
  int degree = 0;
  std::size_t invariant_dim = 0;  ///< h-killed polynomials of this degree on q
  std::size_t restricted_dim = 0; ///< polynomials pulled back from the killed subspace
};

struct GapReport {
  std::vector<GapRow> rows;
  std::size_t q_invariant_dim = 0;
  /// Smallest degree with invariant_dim > restricted_dim, if any.
  std::optional<int> first_gap_degree;
};

/// For every degree up to the bound, compares the dimension of h-invariant
/// homogeneous polynomials on q (the kernel of the infinitesimal action,
/// one exact linear system per degree) against the count of monomials in
/// dim(q^h) variables — the polynomials visible on the h-killed subspace
/// alone. A strict excess shows invariants that restriction cannot see.
GapReport homogeneous_invariant_gap(const ReductivePair& pair, int degree_bound);

}  // namespace rinehart
