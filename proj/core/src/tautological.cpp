#include "rinehart/tautological.hpp"

#include <sstream>
#include <stdexcept>

namespace rinehart {
namespace {

[[noreturn]] void invalid(const std::string& what) { throw std::invalid_argument(what); }

void require_same_context(const PoissonElement& u, const PoissonElement& v) {
  if (!u.context || !v.context) invalid("element has no context");
  if (u.context != v.context && !(*u.context == *v.context)) {
    invalid("elements live over different presentations");
  }
}

}  // namespace

PoissonElement make_element(ContextPtr context, Poly value) {
  if (!context) invalid("element has no context");
  for (const Var& v : value.variables()) {
    bool known = v.kind == VarKind::base ? context->base_index(v).has_value()
                                         : context->fiber_index(v).has_value();
    if (!known) invalid("element uses undeclared variable '" + v.name + "'");
  }
  return PoissonElement{std::move(context), std::move(value)};
}

BracketEngine::BracketEngine(ContextPtr context) : context_(std::move(context)) {
  if (!context_) invalid("bracket engine needs a presentation");
}

Poly BracketEngine::generator_bracket(const Var& g, const Var& h) const {
  const LieRinehartPresentation& pres = *context_;
  if (g.kind == VarKind::fiber && h.kind == VarKind::fiber) {
    auto j = pres.fiber_index(g);
    auto k = pres.fiber_index(h);
    if (!j || !k) invalid("undeclared generator in bracket");
    return pres.basis_bracket(*j, *k);
  }
  if (g.kind == VarKind::fiber && h.kind == VarKind::base) {
    auto j = pres.fiber_index(g);
    auto s = pres.base_index(h);
    if (!j || !s) invalid("undeclared variable in bracket");
    return pres.anchor[*j][*s];
  }
  if (g.kind == VarKind::base && h.kind == VarKind::fiber) {
    return -generator_bracket(h, g);
  }
  return Poly::zero();  // base with base
}

Poly BracketEngine::bracket_monomials(const Monomial& m, const Monomial& n) {
  if (m.is_one() || n.is_one()) return Poly::zero();
  auto key = std::make_pair(m, n);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  Poly result;
  const auto& mf = m.factors().front();
  const auto& nf = n.factors().front();
  const Var g = mf.first;
  Monomial m_rest = m.divided_by(g);
  if (m_rest.is_one()) {
    const Var h = nf.first;
    Monomial n_rest = n.divided_by(h);
    if (n_rest.is_one()) {
      result = generator_bracket(g, h);
    } else {
      // {g, h·n'} = {g, h}·n' + h·{g, n'}
      result = generator_bracket(g, h) * Poly::term(1, n_rest) +
               Poly::variable(h) * bracket_monomials(m, n_rest);
    }
  } else {
    // {g·m', n} = g·{m', n} + {g, n}·m'
    result = Poly::variable(g) * bracket_monomials(m_rest, n) +
             bracket_monomials(Monomial::of(g), n) * Poly::term(1, m_rest);
  }
  memo_.emplace(std::move(key), result);
  return result;
}

Poly BracketEngine::bracket(const Poly& u, const Poly& v) {
  Poly out = Poly::zero();
  for (const auto& [mu, cu] : u.terms()) {
    for (const auto& [mv, cv] : v.terms()) {
      out += (cu * cv) * bracket_monomials(mu, mv);
    }
  }
  return out;
}

PoissonElement BracketEngine::bracket(const PoissonElement& u, const PoissonElement& v) {
  require_same_context(u, v);
  return PoissonElement{u.context, bracket(u.value, v.value)};
}

PoissonElement bracket(const PoissonElement& u, const PoissonElement& v) {
  require_same_context(u, v);
  BracketEngine engine(u.context);
  return engine.bracket(u, v);
}

PoissonElement two_form(ContextPtr context, const Var& g, const Var& h) {
  BracketEngine engine(context);
  return PoissonElement{context, engine.bracket(Poly::variable(g), Poly::variable(h))};
}

PoissonPresentation poisson_presentation_of(ContextPtr context) {
  if (!context) invalid("missing presentation");
  PoissonPresentation pp;
  pp.name = context->name;
  for (const Var& v : context->base_vars) pp.generators.push_back(v);
  for (const Var& v : context->l_basis) pp.generators.push_back(v);
  BracketEngine engine(context);
  const std::size_t r = pp.generators.size();
  pp.table.assign(r, std::vector<Poly>(r, Poly::zero()));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      pp.table[i][j] =
          engine.bracket(Poly::variable(pp.generators[i]), Poly::variable(pp.generators[j]));
    }
  }
  return pp;
}

Poly random_element(const LieRinehartPresentation& pres, SampleRng& rng, int max_fiber_deg,
                    int max_base_deg, int max_terms) {
  Poly out = Poly::zero();
  std::uint64_t terms = 1 + rng.below(static_cast<std::uint64_t>(max_terms));
  for (std::uint64_t t = 0; t < terms; ++t) {
    Monomial m = Monomial::one();
    if (!pres.l_basis.empty()) {
      std::uint64_t deg = rng.below(static_cast<std::uint64_t>(max_fiber_deg) + 1);
      for (std::uint64_t d = 0; d < deg; ++d) {
        m = m * Monomial::of(pres.l_basis[rng.below(pres.fiber_dim())]);
      }
    }
    if (!pres.base_vars.empty()) {
      std::uint64_t deg = rng.below(static_cast<std::uint64_t>(max_base_deg) + 1);
      for (std::uint64_t d = 0; d < deg; ++d) {
        m = m * Monomial::of(pres.base_vars[rng.below(pres.base_dim())]);
      }
    }
    out += Poly::term(rng.small_rational(4, 3), m);
  }
  return out;
}

std::vector<SampledLawReport> check_bracket_laws(ContextPtr context, SampleRng& rng,
                                                 std::size_t samples) {
  BracketEngine engine(context);
  SampledLawReport anti{"antisymmetry"};
  SampledLawReport leibniz{"leibniz"};
  SampledLawReport jacobi{"jacobi"};

  for (std::size_t n = 0; n < samples; ++n) {
    Poly u = random_element(*context, rng);
    Poly v = random_element(*context, rng);
    Poly w = random_element(*context, rng);

    if (anti.ok) {
      Poly defect = engine.bracket(u, v) + engine.bracket(v, u);
      ++anti.samples;
      if (!defect.is_zero()) {
        anti.ok = false;
        anti.witness_elements = {u.to_string(), v.to_string()};
        anti.defect = defect;
      }
    }
    if (leibniz.ok) {
      Poly defect =
          engine.bracket(u, v * w) - engine.bracket(u, v) * w - v * engine.bracket(u, w);
      ++leibniz.samples;
      if (!defect.is_zero()) {
        leibniz.ok = false;
        leibniz.witness_elements = {u.to_string(), v.to_string(), w.to_string()};
        leibniz.defect = defect;
      }
    }
    if (jacobi.ok) {
      Poly defect = engine.bracket(u, engine.bracket(v, w)) +
                    engine.bracket(v, engine.bracket(w, u)) +
                    engine.bracket(w, engine.bracket(u, v));
      ++jacobi.samples;
      if (!defect.is_zero()) {
        jacobi.ok = false;
        jacobi.witness_elements = {u.to_string(), v.to_string(), w.to_string()};
        jacobi.defect = defect;
      }
    }
  }
  return {anti, leibniz, jacobi};
}

SampledLawReport check_jacobi_sampled(ContextPtr context,
                                      const std::vector<std::array<Poly, 3>>& triples) {
  BracketEngine engine(context);
  SampledLawReport report{"jacobi"};
  for (const auto& [u, v, w] : triples) {
    Poly defect = engine.bracket(u, engine.bracket(v, w)) +
                  engine.bracket(v, engine.bracket(w, u)) +
                  engine.bracket(w, engine.bracket(u, v));
    ++report.samples;
    if (!defect.is_zero()) {
      report.ok = false;
      report.witness_elements = {u.to_string(), v.to_string(), w.to_string()};
      report.defect = defect;
      break;
    }
  }
  return report;
}

PotentialReport check_potential(ContextPtr context) {
  PoissonPresentation pp = poisson_presentation_of(context);
  PotentialReport report;

  // ϑ sends a module generator differential to the generator itself and a
  // base differential to zero, extended linearly over the element algebra.
  auto theta = [&](const DifferentialElement& x) {
    Poly out = Poly::zero();
    for (std::size_t i = 0; i < pp.generators.size(); ++i) {
      if (pp.generators[i].kind == VarKind::fiber && !x.coeff[i].is_zero()) {
        out += x.coeff[i] * Poly::variable(pp.generators[i]);
      }
    }
    return out;
  };

  for (std::size_t i = 0; i < pp.generators.size() && report.ok; ++i) {
    DifferentialElement x = zero_differential(pp);
    x.coeff[i] = Poly::one();
    Derivation px = pi_sharp(pp, x);
    for (std::size_t j = 0; j < pp.generators.size() && report.ok; ++j) {
      DifferentialElement y = zero_differential(pp);
      y.coeff[j] = Poly::one();
      Poly actual = px.apply(theta(y)) - pi_sharp(pp, y).apply(theta(x)) -
                    theta(kaehler_bracket(pp, x, y));
      Poly expected = pp.table[i][j];
      ++report.pairs_checked;
      if (actual != expected) {
        report.ok = false;
        report.witness = PotentialWitness{"d" + pp.generators[i].name,
                                          "d" + pp.generators[j].name, expected, actual};
      }
    }
  }
  return report;
}

LieRinehartPresentation reconstruct(ContextPtr context) {
  if (!context) invalid("missing presentation");
  const LieRinehartPresentation& pres = *context;
  BracketEngine engine(context);
  LieRinehartPresentation out;
  out.name = pres.name;
  out.base_vars = pres.base_vars;
  out.l_basis = pres.l_basis;
  const std::size_t m = pres.fiber_dim();
  const std::size_t n = pres.base_dim();
  out.anchor.assign(m, std::vector<Poly>(n, Poly::zero()));
  out.structure.assign(m, std::vector<std::vector<Poly>>(m, std::vector<Poly>(m, Poly::zero())));
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t s = 0; s < n; ++s) {
      out.anchor[j][s] =
          engine.bracket(Poly::variable(pres.l_basis[j]), Poly::variable(pres.base_vars[s]));
    }
    for (std::size_t k = 0; k < m; ++k) {
      Poly b = engine
                   .bracket(Poly::variable(pres.l_basis[j]), Poly::variable(pres.l_basis[k]))
                   .fiber_degree_part(1);
      for (std::size_t i = 0; i < m; ++i) {
        out.structure[j][k][i] = b.partial(pres.l_basis[i]);
      }
    }
  }
  validate_presentation(out);
  return out;
}

}  // namespace rinehart
