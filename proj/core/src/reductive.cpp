#include "rinehart/reductive.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "rinehart/poly.hpp"

namespace rinehart {
namespace {

[[noreturn]] void invalid(const std::string& what) { throw std::invalid_argument(what); }

/// Monomials of exact degree d in the given variables, in a deterministic
/// order (lexicographic in exponent patterns).
void homogeneous_monomials(const std::vector<Var>& vars, int degree, std::size_t from,
                           Monomial current, std::vector<Monomial>& out) {
  if (degree == 0) {
    out.push_back(current);
    return;
  }
  if (from >= vars.size()) return;
  for (int take = degree; take >= 0; --take) {
    Monomial next = take == 0 ? current : current * Monomial::of(vars[from], take);
    homogeneous_monomials(vars, degree - take, from + 1, next, out);
  }
}

std::size_t monomial_count(std::size_t var_count, int degree) {
  // C(var_count + degree - 1, degree)
  if (degree == 0) return 1;
  if (var_count == 0) return 0;
  std::size_t num = 1, den = 1;
  for (int i = 0; i < degree; ++i) {
    num *= var_count + degree - 1 - i;
    den *= static_cast<std::size_t>(i) + 1;
  }
  return num / den;
}

}  // namespace

void validate_lie_algebra(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  if (g.structure.size() != n) invalid("structure tensor must have one plane per basis element");
  for (std::size_t i = 0; i < n; ++i) {
    if (g.structure[i].size() != n) invalid("structure tensor row count mismatch");
    for (std::size_t j = 0; j < n; ++j) {
      if (g.structure[i][j].size() != n) invalid("structure tensor column count mismatch");
      for (std::size_t k = 0; k < n; ++k) {
        if (g.structure[i][j][k] != -g.structure[j][i][k]) {
          invalid("structure constants are not antisymmetric at (" + g.basis_names[i] + ", " +
                  g.basis_names[j] + ")");
        }
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        for (std::size_t p = 0; p < n; ++p) {
          Rational sum(0);
          for (std::size_t l = 0; l < n; ++l) {
            sum += g.structure[j][k][l] * g.structure[i][l][p];
            sum += g.structure[k][i][l] * g.structure[j][l][p];
            sum += g.structure[i][j][l] * g.structure[k][l][p];
          }
          if (sum != 0) {
            invalid("structure constants violate the Jacobi identity at (" + g.basis_names[i] +
                    ", " + g.basis_names[j] + ", " + g.basis_names[k] + ")");
          }
        }
      }
    }
  }
}

ReductivePair make_reductive_pair(std::string name, LieAlgebra g, std::vector<std::size_t> h,
                                  std::vector<std::size_t> q) {
  validate_lie_algebra(g);
  std::vector<bool> used(g.dim(), false);
  auto mark = [&](std::size_t idx) {
    if (idx >= g.dim()) invalid("basis index out of range");
    if (used[idx]) invalid("basis index repeated across the decomposition");
    used[idx] = true;
  };
  for (std::size_t idx : h) mark(idx);
  for (std::size_t idx : q) mark(idx);
  if (std::find(used.begin(), used.end(), false) != used.end()) {
    invalid("decomposition does not cover the basis");
  }
  return ReductivePair{std::move(name), std::move(g), std::move(h), std::move(q)};
}

RatMatrix action_on_q(const ReductivePair& pair, std::size_t i) {
  const std::size_t r = pair.q.size();
  RatMatrix m(r, r);
  for (std::size_t k = 0; k < r; ++k) {
    for (std::size_t a = 0; a < r; ++a) {
      m.at(a, k) = pair.g.structure[pair.h[i]][pair.q[k]][pair.q[a]];
    }
  }
  return m;
}

ReductiveReport check_reductive(const ReductivePair& pair) {
  ReductiveReport report;
  const auto& c = pair.g.structure;
  auto in_set = [](const std::vector<std::size_t>& set, std::size_t idx) {
    return std::find(set.begin(), set.end(), idx) != set.end();
  };

  auto witness = [&](std::size_t i, std::size_t j, std::size_t k, const char* law) {
    std::ostringstream text;
    text << law << ": [" << pair.g.basis_names[i] << ", " << pair.g.basis_names[j]
         << "] has component " << to_string(c[i][j][k]) << " on " << pair.g.basis_names[k];
    return PairWitness{i + 1, j + 1, k + 1, c[i][j][k], text.str()};
  };

  for (std::size_t i : pair.h) {
    for (std::size_t j : pair.h) {
      for (std::size_t k : pair.q) {
        if (c[i][j][k] != 0 && report.h_subalgebra) {
          report.h_subalgebra = false;
          if (!report.witness) report.witness = witness(i, j, k, "[h,h] escapes h");
        }
      }
    }
    for (std::size_t j : pair.q) {
      for (std::size_t k : pair.h) {
        if (c[i][j][k] != 0 && report.h_q_into_q) {
          report.h_q_into_q = false;
          if (!report.witness) report.witness = witness(i, j, k, "[h,q] escapes q");
        }
      }
    }
  }
  for (std::size_t i : pair.q) {
    for (std::size_t j : pair.q) {
      for (std::size_t k : pair.q) {
        if (c[i][j][k] != 0 && report.q_q_into_h) {
          report.q_q_into_h = false;
          if (!report.witness) report.witness = witness(i, j, k, "[q,q] escapes h");
        }
      }
    }
  }

  if (report.h_q_into_q && !pair.q.empty()) {
    const std::size_t r = pair.q.size();
    RatMatrix stacked(pair.h.size() * r, r);
    for (std::size_t i = 0; i < pair.h.size(); ++i) {
      RatMatrix m = action_on_q(pair, i);
      for (std::size_t a = 0; a < r; ++a) {
        for (std::size_t b = 0; b < r; ++b) {
          stacked.at(i * r + a, b) = m.at(a, b);
        }
      }
    }
    report.q_invariant_dim = r - stacked.rank();
  }
  return report;
}

GapReport homogeneous_invariant_gap(const ReductivePair& pair, int degree_bound) {
  ReductiveReport base = check_reductive(pair);
  if (!base.h_q_into_q) {
    invalid("the action of h does not preserve q; no invariant comparison is defined");
  }
  const std::size_t r = pair.q.size();

  std::vector<Var> vars;
  for (std::size_t a = 0; a < r; ++a) {
    vars.push_back(base_var("y" + std::to_string(a + 1)));
  }
  std::vector<RatMatrix> actions;
  for (std::size_t i = 0; i < pair.h.size(); ++i) actions.push_back(action_on_q(pair, i));

  // Infinitesimal action on polynomials: for the matrix M of ad(h_i)|q,
  // (h_i · f) = Σ_{a,b} M_{ab} y_b ∂f/∂y_a up to overall sign, which does
  // not affect the kernel.
  auto act = [&](const RatMatrix& m, const Poly& f) {
    Poly out = Poly::zero();
    for (std::size_t a = 0; a < r; ++a) {
      Poly df = f.partial(vars[a]);
      if (df.is_zero()) continue;
      for (std::size_t b = 0; b < r; ++b) {
        if (m.at(a, b) == 0) continue;
        out += Rational(m.at(a, b)) * Poly::variable(vars[b]) * df;
      }
    }
    return out;
  };

  GapReport report;
  report.q_invariant_dim = base.q_invariant_dim;
  for (int degree = 0; degree <= degree_bound; ++degree) {
    std::vector<Monomial> monos;
    homogeneous_monomials(vars, degree, 0, Monomial::one(), monos);
    std::map<Monomial, std::size_t, MonomialOrder> index;
    for (const Monomial& m : monos) index.emplace(m, index.size());

    // One row per (h generator, image monomial); columns index source
    // monomials of this degree.
    RatMatrix system(actions.size() * monos.size(), monos.size());
    for (std::size_t col = 0; col < monos.size(); ++col) {
      for (std::size_t i = 0; i < actions.size(); ++i) {
        Poly image = act(actions[i], Poly::term(1, monos[col]));
        for (const auto& [m, coeff] : image.terms()) {
          system.at(i * monos.size() + index.at(m), col) = coeff;
        }
      }
    }
    GapRow row;
    row.degree = degree;
    row.invariant_dim = monos.size() - system.rank();
    row.restricted_dim = monomial_count(report.q_invariant_dim, degree);
    if (row.invariant_dim > row.restricted_dim && !report.first_gap_degree) {
      report.first_gap_degree = degree;
    }
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace rinehart
