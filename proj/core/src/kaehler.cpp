#include "rinehart/kaehler.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace rinehart {
namespace {

[[noreturn]] void invalid(const std::string& what) { throw std::invalid_argument(what); }

}  // namespace

Poly PoissonPresentation::bracket(const Poly& f, const Poly& g) const {
  Poly out = Poly::zero();
  for (std::size_t i = 0; i < generators.size(); ++i) {
    Poly df = f.partial(generators[i]);
    if (df.is_zero()) continue;
    for (std::size_t j = 0; j < generators.size(); ++j) {
      if (table[i][j].is_zero()) continue;
      Poly dg = g.partial(generators[j]);
      if (dg.is_zero()) continue;
      out += df * dg * table[i][j];
    }
  }
  return out;
}

std::optional<std::size_t> PoissonPresentation::generator_index(const Var& v) const {
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i] == v) return i;
  }
  return std::nullopt;
}

void validate_poisson_presentation(const PoissonPresentation& pp) {
  const std::size_t r = pp.generators.size();
  if (pp.table.size() != r) invalid("bracket table must have one row per generator");
  for (std::size_t i = 0; i < r; ++i) {
    if (pp.table[i].size() != r) invalid("bracket table row has wrong length");
    for (std::size_t j = 0; j < r; ++j) {
      if (pp.table[i][j] != -pp.table[j][i]) {
        invalid("bracket table is not antisymmetric at (" + pp.generators[i].name + ", " +
                pp.generators[j].name + ")");
      }
      for (const Var& v : pp.table[i][j].variables()) {
        if (!pp.generator_index(v)) {
          invalid("bracket table entry uses undeclared variable '" + v.name + "'");
        }
      }
    }
  }
}

DifferentialElement zero_differential(const PoissonPresentation& pp) {
  return DifferentialElement{std::vector<Poly>(pp.generators.size(), Poly::zero())};
}

DifferentialElement differential_of(const PoissonPresentation& pp, const Poly& w) {
  DifferentialElement out = zero_differential(pp);
  for (std::size_t i = 0; i < pp.generators.size(); ++i) {
    out.coeff[i] = w.partial(pp.generators[i]);
  }
  return out;
}

DifferentialElement kaehler_bracket(const PoissonPresentation& pp, const DifferentialElement& x,
                                    const DifferentialElement& y) {
  const std::size_t r = pp.generators.size();
  if (x.coeff.size() != r || y.coeff.size() != r) {
    invalid("differential element has wrong number of coefficients");
  }
  DifferentialElement out = zero_differential(pp);
  for (std::size_t i = 0; i < r; ++i) {
    const Poly& a = x.coeff[i];
    if (a.is_zero()) continue;
    Poly u = Poly::variable(pp.generators[i]);
    for (std::size_t j = 0; j < r; ++j) {
      const Poly& b = y.coeff[j];
      if (b.is_zero()) continue;
      Poly v = Poly::variable(pp.generators[j]);
      out.coeff[j] += a * pp.bracket(u, b);
      out.coeff[i] += b * pp.bracket(a, v);
      DifferentialElement d_uv = differential_of(pp, pp.table[i][j]);
      Poly ab = a * b;
      for (std::size_t l = 0; l < r; ++l) {
        out.coeff[l] += ab * d_uv.coeff[l];
      }
    }
  }
  return out;
}

Derivation pi_sharp(const PoissonPresentation& pp, const DifferentialElement& x) {
  const std::size_t r = pp.generators.size();
  if (x.coeff.size() != r) invalid("differential element has wrong number of coefficients");
  std::map<Var, Poly> images;
  for (std::size_t j = 0; j < r; ++j) {
    Poly image = Poly::zero();
    for (std::size_t i = 0; i < r; ++i) {
      if (x.coeff[i].is_zero() || pp.table[i][j].is_zero()) continue;
      image += x.coeff[i] * pp.table[i][j];
    }
    images.emplace(pp.generators[j], std::move(image));
  }
  return Derivation(std::move(images));
}

MorphismReport check_pi_sharp_morphism(const PoissonPresentation& pp) {
  validate_poisson_presentation(pp);
  MorphismReport report;
  const std::size_t r = pp.generators.size();

  // Multipliers: 1 and each generator.
  std::vector<Poly> multipliers;
  std::vector<std::string> multiplier_text;
  multipliers.push_back(Poly::one());
  multiplier_text.push_back("1");
  for (const Var& v : pp.generators) {
    multipliers.push_back(Poly::variable(v));
    multiplier_text.push_back(v.name);
  }

  for (std::size_t ai = 0; ai < multipliers.size() && report.ok; ++ai) {
    for (std::size_t i = 0; i < r && report.ok; ++i) {
      DifferentialElement x = zero_differential(pp);
      x.coeff[i] = multipliers[ai];
      Derivation px = pi_sharp(pp, x);
      for (std::size_t bi = 0; bi < multipliers.size() && report.ok; ++bi) {
        for (std::size_t j = 0; j < r && report.ok; ++j) {
          DifferentialElement y = zero_differential(pp);
          y.coeff[j] = multipliers[bi];
          Derivation lhs = pi_sharp(pp, kaehler_bracket(pp, x, y));
          Derivation rhs = commutator(px, pi_sharp(pp, y));
          ++report.pairs_checked;
          if (lhs == rhs) continue;
          report.ok = false;
          for (const Var& g : pp.generators) {
            Poly defect = lhs.image_of(g) - rhs.image_of(g);
            if (defect.is_zero()) continue;
            report.witness = MorphismWitness{multiplier_text[ai] + "*d" + pp.generators[i].name,
                                             multiplier_text[bi] + "*d" + pp.generators[j].name, g,
                                             defect};
            break;
          }
        }
      }
    }
  }
  return report;
}

}  // namespace rinehart
