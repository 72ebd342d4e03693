#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rinehart/kaehler.hpp"
#include "rinehart/lie_rinehart.hpp"
#include "rinehart/poly.hpp"
#include "rinehart/rng.hpp"

namespace rinehart {

using ContextPtr = std::shared_ptr<const LieRinehartPresentation>;

/// Element of the polynomial algebra generated over the base by the module
/// generators, tagged with the presentation it lives over.
struct PoissonElement {
  ContextPtr context;
  Poly value;
};

/// Validates that every variable of `value` is declared by the presentation.
PoissonElement make_element(ContextPtr context, Poly value);

/// Computes the bracket determined by the presentation: generators pair
/// through structure functions, a generator acts on base elements through its
/// anchor, and base elements commute. Extension to products runs the Leibniz
/// rule recursively on the leading variable of each monomial, memoized on
/// monomial pairs for the lifetime of the engine.
class BracketEngine {
 public:
  explicit BracketEngine(ContextPtr context);

  Poly bracket(const Poly& u, const Poly& v);
  PoissonElement bracket(const PoissonElement& u, const PoissonElement& v);

  const ContextPtr& context() const { return context_; }

 private:
  Poly bracket_monomials(const Monomial& m, const Monomial& n);
  Poly generator_bracket(const Var& g, const Var& h) const;

  struct PairOrder {
    MonomialOrder order;
    bool operator()(const std::pair<Monomial, Monomial>& a,
                    const std::pair<Monomial, Monomial>& b) const {
      if (order(a.first, b.first)) return true;
      if (order(b.first, a.first)) return false;
      return order(a.second, b.second);
    }
  };

  ContextPtr context_;
  std::map<std::pair<Monomial, Monomial>, Poly, PairOrder> memo_;
};

/// One-shot convenience wrapper around a fresh engine.
PoissonElement bracket(const PoissonElement& u, const PoissonElement& v);

/// The bracket of two generators as an element, for seeding two-argument
/// computations.
PoissonElement two_form(ContextPtr context, const Var& g, const Var& h);

/// The full generator bracket table of the element algebra, reusable as a
/// Poisson presentation over the combined generator list (base variables
/// first, module generators after).
PoissonPresentation poisson_presentation_of(ContextPtr context);

struct SampledLawReport {
  std::string law;  ///< "antisymmetry", "leibniz", or "jacobi"
  bool ok = true;
  std::size_t samples = 0;
  std::vector<std::string> witness_elements;
  Poly defect;
};

/// Draws `samples` triples of random elements (fiber and base degree ≤ 3)
/// from the seeded generator and evaluates antisymmetry, the Leibniz rule,
/// and the Jacobi identity on each. Stops a law at its first counterexample.
std::vector<SampledLawReport> check_bracket_laws(ContextPtr context, SampleRng& rng,
                                                 std::size_t samples);

/// Jacobi only, on caller-provided triples.
SampledLawReport check_jacobi_sampled(ContextPtr context,
                                      const std::vector<std::array<Poly, 3>>& triples);

/// Random element with fiber degree ≤ max_fiber_deg, base degree ≤
/// max_base_deg, and at most max_terms terms.
Poly random_element(const LieRinehartPresentation& pres, SampleRng& rng, int max_fiber_deg = 3,
                    int max_base_deg = 3, int max_terms = 3);

struct PotentialWitness {
  std::string x_text;
  std::string y_text;
  Poly expected;
  Poly actual;
};

struct PotentialReport {
  bool ok = true;
  std::size_t pairs_checked = 0;
  std::optional<PotentialWitness> witness;
};

/// Realizes the generator pairing ϑ (module differentials map to their
/// generators, base differentials to zero) and verifies that its exterior
/// derivative against π♯,
///   (dϑ)(x, y) = π♯x(ϑy) − π♯y(ϑx) − ϑ([x, y]),
/// reproduces the bracket table on all generator differential pairs.
PotentialReport check_potential(ContextPtr context);

/// Reads a presentation back off the bracket: anchor rows from generator ×
/// base-variable brackets, structure functions from the fiber-degree-one part
/// of generator × generator brackets. Round-trips to the input presentation.
LieRinehartPresentation reconstruct(ContextPtr context);

}  // namespace rinehart
