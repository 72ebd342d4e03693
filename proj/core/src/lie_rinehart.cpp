#include "rinehart/lie_rinehart.hpp"

#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace rinehart {
namespace {

[[noreturn]] void invalid(const std::string& what) { throw std::invalid_argument(what); }

bool base_only(const Poly& p) { return !p.uses(VarKind::fiber); }

}  // namespace

Derivation LieRinehartPresentation::anchor_derivation(std::size_t j) const {
  std::map<Var, Poly> images;
  for (std::size_t s = 0; s < base_vars.size(); ++s) {
    images.emplace(base_vars[s], anchor[j][s]);
  }
  return Derivation(std::move(images));
}

Poly LieRinehartPresentation::basis_bracket(std::size_t j, std::size_t k) const {
  Poly out = Poly::zero();
  for (std::size_t i = 0; i < l_basis.size(); ++i) {
    out += structure[j][k][i] * Poly::variable(l_basis[i]);
  }
  return out;
}

std::optional<std::size_t> LieRinehartPresentation::base_index(const Var& v) const {
  for (std::size_t s = 0; s < base_vars.size(); ++s) {
    if (base_vars[s] == v) return s;
  }
  return std::nullopt;
}

std::optional<std::size_t> LieRinehartPresentation::fiber_index(const Var& v) const {
  for (std::size_t j = 0; j < l_basis.size(); ++j) {
    if (l_basis[j] == v) return j;
  }
  return std::nullopt;
}

LieRinehartPresentation make_presentation(std::string name,
                                          const std::vector<std::string>& base_names,
                                          const std::vector<std::string>& fiber_names,
                                          std::vector<std::vector<Poly>> anchor,
                                          StructureTensor structure) {
  LieRinehartPresentation pres;
  pres.name = std::move(name);
  for (const auto& n : base_names) pres.base_vars.push_back(base_var(n));
  for (const auto& n : fiber_names) pres.l_basis.push_back(fiber_var(n));
  const std::size_t m = pres.fiber_dim();
  const std::size_t n = pres.base_dim();
  anchor.resize(m);
  for (auto& row : anchor) row.resize(n, Poly::zero());
  structure.resize(m);
  for (auto& plane : structure) {
    plane.resize(m);
    for (auto& row : plane) row.resize(m, Poly::zero());
  }
  pres.anchor = std::move(anchor);
  pres.structure = std::move(structure);
  validate_presentation(pres);
  return pres;
}

void validate_presentation(const LieRinehartPresentation& pres) {
  const std::size_t m = pres.fiber_dim();
  const std::size_t n = pres.base_dim();
  std::set<std::string> seen;
  for (const auto& v : pres.base_vars) {
    if (v.kind != VarKind::base) invalid("base variable '" + v.name + "' has wrong kind");
    if (!seen.insert(v.name).second) invalid("duplicate variable name '" + v.name + "'");
  }
  for (const auto& v : pres.l_basis) {
    if (v.kind != VarKind::fiber) invalid("generator '" + v.name + "' has wrong kind");
    if (!seen.insert(v.name).second) invalid("duplicate variable name '" + v.name + "'");
  }
  if (pres.anchor.size() != m) invalid("anchor must have one row per generator");
  for (std::size_t j = 0; j < m; ++j) {
    if (pres.anchor[j].size() != n) invalid("anchor row has wrong length");
    for (std::size_t s = 0; s < n; ++s) {
      const Poly& entry = pres.anchor[j][s];
      if (!base_only(entry)) {
        invalid("anchor entry for " + pres.l_basis[j].name + " must use base variables only");
      }
      for (const Var& v : entry.variables()) {
        if (!pres.base_index(v)) invalid("anchor entry uses undeclared variable '" + v.name + "'");
      }
    }
  }
  if (pres.structure.size() != m) invalid("structure tensor must have one plane per generator");
  for (std::size_t j = 0; j < m; ++j) {
    if (pres.structure[j].size() != m) invalid("structure tensor row count mismatch");
    for (std::size_t k = 0; k < m; ++k) {
      if (pres.structure[j][k].size() != m) invalid("structure tensor column count mismatch");
      for (std::size_t i = 0; i < m; ++i) {
        const Poly& entry = pres.structure[j][k][i];
        if (!base_only(entry)) {
          invalid("structure function for [" + pres.l_basis[j].name + "," + pres.l_basis[k].name +
                  "] must use base variables only");
        }
        for (const Var& v : entry.variables()) {
          if (!pres.base_index(v)) {
            invalid("structure function uses undeclared variable '" + v.name + "'");
          }
        }
        if (entry != -pres.structure[k][j][i]) {
          invalid("structure tensor is not antisymmetric at [" + pres.l_basis[j].name + "," +
                  pres.l_basis[k].name + "]");
        }
      }
    }
  }
}

Poly apply_anchor(const LieRinehartPresentation& pres, std::size_t j, const Poly& a) {
  if (a.uses(VarKind::fiber)) {
    invalid("anchor applied to a polynomial containing module generators");
  }
  return pres.anchor_derivation(j).apply(a);
}

Poly bracket_with_fiber_linear(const LieRinehartPresentation& pres, std::size_t j, const Poly& w) {
  if (w.degree(VarKind::fiber) > 1) {
    invalid("bracket_with_fiber_linear expects fiber degree at most 1");
  }
  Poly out = apply_anchor(pres, j, w.fiber_degree_part(0));
  for (std::size_t k = 0; k < pres.fiber_dim(); ++k) {
    Poly coeff = w.partial(pres.l_basis[k]);
    if (coeff.is_zero()) continue;
    out += coeff * pres.basis_bracket(j, k);
    out += apply_anchor(pres, j, coeff) * Poly::variable(pres.l_basis[k]);
  }
  return out;
}

AxiomReport check_axioms(const LieRinehartPresentation& pres) {
  validate_presentation(pres);
  AxiomReport report;
  const std::size_t m = pres.fiber_dim();
  const std::size_t n = pres.base_dim();

  // Jacobi on basis triples. The cyclic sum is alternating, so distinct
  // increasing triples cover every case; tuples with a repeated index cancel
  // pairwise against themselves.
  for (std::size_t i = 0; i + 2 < m && report.jacobi_ok; ++i) {
    for (std::size_t j = i + 1; j + 1 < m && report.jacobi_ok; ++j) {
      for (std::size_t k = j + 1; k < m && report.jacobi_ok; ++k) {
        Poly defect = bracket_with_fiber_linear(pres, i, pres.basis_bracket(j, k)) +
                      bracket_with_fiber_linear(pres, j, pres.basis_bracket(k, i)) +
                      bracket_with_fiber_linear(pres, k, pres.basis_bracket(i, j));
        if (!defect.is_zero()) {
          report.jacobi_ok = false;
          std::ostringstream text;
          text << "Jacobi sum over (" << pres.l_basis[i].name << ", " << pres.l_basis[j].name
               << ", " << pres.l_basis[k].name << ") equals " << defect.to_string();
          report.jacobi_witness = AxiomWitness{{i + 1, j + 1, k + 1}, defect, text.str()};
        }
      }
    }
  }

  // The anchor must carry brackets to commutators of derivations.
  for (std::size_t j = 0; j < m && report.anchor_morphism_ok; ++j) {
    for (std::size_t k = j + 1; k < m && report.anchor_morphism_ok; ++k) {
      Derivation lhs;
      for (std::size_t l = 0; l < m; ++l) {
        lhs = lhs + pres.structure[j][k][l] * pres.anchor_derivation(l);
      }
      Derivation rhs = commutator(pres.anchor_derivation(j), pres.anchor_derivation(k));
      if (lhs == rhs) continue;
      for (std::size_t s = 0; s < n; ++s) {
        Poly defect = lhs.image_of(pres.base_vars[s]) - rhs.image_of(pres.base_vars[s]);
        if (defect.is_zero()) continue;
        report.anchor_morphism_ok = false;
        std::ostringstream text;
        text << "anchor of [" << pres.l_basis[j].name << "," << pres.l_basis[k].name
             << "] and the commutator of anchors differ on " << pres.base_vars[s].name << " by "
             << defect.to_string();
        report.anchor_witness = AxiomWitness{{j + 1, k + 1, s + 1}, defect, text.str()};
        break;
      }
    }
  }
  return report;
}

}  // namespace rinehart
