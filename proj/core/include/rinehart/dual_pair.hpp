#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rinehart/poly.hpp"
#include "rinehart/ratmat.hpp"

namespace rinehart {

/// A symplectic coordinate scene: l rows of vectors q_j, p_j in s-space,
/// coordinate variables named q1_1 … ql_s and p1_1 … pl_s. The q variables
/// carry kind base and the p variables kind fiber, so the (q-degree,
/// p-degree) bigrading of a polynomial is the built-in kind grading.
struct DualPairScene {
  int s = 1;
  int l = 1;
  std::vector<std::vector<Var>> q;  ///< q[j][alpha], zero-based indices
  std::vector<std::vector<Var>> p;

  static DualPairScene make(int s, int l);

  /// Canonical flat ordering: all q variables row by row, then all p
  /// variables row by row. Point arguments use this layout.
  std::vector<Var> all_vars() const;
};

/// {f, g} = Σ_{j,α} (∂f/∂q_{jα} ∂g/∂p_{jα} − ∂f/∂p_{jα} ∂g/∂q_{jα}).
Poly canonical_bracket(const DualPairScene& scene, const Poly& f, const Poly& g);

enum class InvariantKind { QQ, QP, PP };

struct QuadraticInvariant {
  InvariantKind kind;
  int j = 1;  ///< 1-based row indices
  int k = 1;
  Poly value;
  std::string label() const;  ///< "q1.q2", "q1.p2", "p1.p2"
};

/// The pairwise dot products q_j·q_k (j ≤ k), q_j·p_k (all j, k), and
/// p_j·p_k (j ≤ k), in this order; l(2l+1) generators in total. Every one is
/// invariant under substituting any orthogonal change of the α index, since
/// it only depends on dot products.
std::vector<QuadraticInvariant> invariant_generators(const DualPairScene& scene);

struct ClosureTable {
  std::vector<QuadraticInvariant> basis;
  /// coeffs[a][b][u]: coefficient of basis[u] in {basis[a], basis[b]}.
  std::vector<std::vector<std::vector<Rational>>> coeffs;
};

/// Expands all pairwise brackets of the generators and solves for their
/// coordinates over the generator span by exact linear algebra over the
/// quadratic monomials. Throws std::runtime_error if any bracket escapes the
/// span.
ClosureTable closure_table(const DualPairScene& scene);

/// Dimension l(2l+1) of the symplectic matrix algebra on 2l letters.
std::size_t sp_dimension(int l);

/// Standard basis of that matrix algebra in block form [[a, b], [c, −aᵀ]]
/// with b and c symmetric: l² unit a-blocks, then the symmetric b units,
/// then the symmetric c units.
std::vector<RatMatrix> sp_standard_basis(int l);

/// XY − YX.
RatMatrix matrix_commutator(const RatMatrix& x, const RatMatrix& y);

/// Membership test for the matrix algebra: M·J symmetric for the standard
/// block form J = [[0, I], [−I, 0]].
bool is_sp_element(const RatMatrix& m);

/// The 2l×2l block matrix [[A, B], [C, −Aᵀ]] with A_{jk} = q_j·p_k,
/// B_{jk} = −q_j·q_k, C_{jk} = p_j·p_k, as quadratic polynomials.
std::vector<std::vector<Poly>> momentum_symbolic(const DualPairScene& scene);

/// Same matrix evaluated at a rational point (canonical layout).
RatMatrix momentum_matrix(const DualPairScene& scene, const std::vector<Rational>& point);

/// ⟨μ, X⟩ = ½ tr(μ X): the quadratic polynomial paired with a matrix.
Poly momentum_pairing(const DualPairScene& scene, const RatMatrix& x);

struct MomentumPropertyReport {
  bool ok = true;
  std::size_t pairs_checked = 0;
  std::string witness;
};

/// Verifies {⟨μ,X⟩, ⟨μ,Y⟩} = ⟨μ, [X,Y]⟩ for all pairs from the standard
/// basis — the pairing is a Lie morphism into the canonical bracket.
MomentumPropertyReport momentum_property_check(const DualPairScene& scene);

struct SpIsomorphismReport {
  bool ok = true;
  std::size_t dimension = 0;  ///< l(2l+1)
  std::string detail;         ///< failure description, empty when ok
};

/// Identifies the invariant span with the matrix algebra: expresses each
/// invariant over the pairings of the standard basis by exact linear solve,
/// checks the change of basis is invertible, and replays the closure table
/// as matrix commutators.
SpIsomorphismReport verify_sp_isomorphism(const DualPairScene& scene);

/// Gram matrix G_{jk} = q_j·q_k of the q-rows at a rational q-point
/// (q coordinates only, canonical layout).
RatMatrix hilbert_map(const DualPairScene& scene, const std::vector<Rational>& q_point);

struct HilbertPreimage {
  enum class Status { exact, numeric, infeasible };
  Status status = Status::infeasible;
  std::size_t rank = 0;
  /// Exact path: vectors[j] is q_j ∈ ℚ^s with Gram equal to the input.
  std::vector<std::vector<Rational>> vectors;
  /// Numeric path: floating vectors with exactly-computed residual bound.
  std::vector<std::vector<double>> vectors_num;
  Rational residual;        ///< max-norm of (input − Gram of vectors_num), exact
  bool residual_ok = false; ///< residual ≤ 10⁻¹²
  std::string infeasible_reason;       ///< "indefinite" or "rank_exceeds_s"
  std::vector<Rational> witness;       ///< direction v with vᵀmv < 0 when indefinite
  Rational witness_value;
};

/// Decides whether a symmetric rational matrix is a Gram matrix of l vectors
/// in s-space. Decomposes m = Σ d_i c_i c_iᵀ exactly; when every pivot d_i is
/// a rational perfect square the vectors are exact, otherwise floating square
/// roots are used and the residual is certified by exact arithmetic on the
/// rounded values. Indefinite inputs and rank above s are infeasible, with
/// witnesses.
HilbertPreimage hilbert_preimage(const RatMatrix& m, int s);

struct DeficiencyReport {
  bool ok = true;  ///< every p·p generator certified outside the span
  std::size_t qq_qp_count = 0;
  std::size_t pp_count = 0;
  std::vector<std::string> certified_missing;  ///< labels of p·p generators
  bool qp_members_ok = true;  ///< q·p generators are trivially inside
  bool kinetic_missing = true;  ///< Σ_j p_j·p_j is outside as well
  std::string detail;
};

/// Certifies that no p·p invariant lies in the subalgebra generated by the
/// q·q and q·p invariants. The generators are bihomogeneous in (q-degree,
/// p-degree) — (2,0) and (1,1) — so the degree-2 component of the subalgebra
/// they generate is exactly their linear span (products of two or more
/// generators have degree ≥ 4), and membership of a quadratic reduces to one
/// exact linear solve over quadratic monomials.
DeficiencyReport sal_deficiency_report(const DualPairScene& scene);

/// Parses "a,b,c" with rational entries.
std::vector<Rational> parse_point(const std::string& text);

/// Parses "1,2;2,4" row by row into a matrix; validates rectangular shape.
RatMatrix parse_matrix(const std::string& text);

}  // namespace rinehart
