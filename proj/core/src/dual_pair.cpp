#include "rinehart/dual_pair.hpp"

#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace rinehart {
namespace {

[[noreturn]] void invalid(const std::string& what) { throw std::invalid_argument(what); }

std::string coordinate_name(const char* stem, int j, int alpha) {
  std::ostringstream out;
  out << stem << (j + 1) << "_" << (alpha + 1);
  return out.str();
}

/// Canonical indexing of a finite monomial collection for exact linear
/// algebra over polynomial coordinates.
using MonomialIndex = std::map<Monomial, std::size_t, MonomialOrder>;

void index_monomials(MonomialIndex& index, const Poly& p) {
  for (const auto& [m, c] : p.terms()) {
    index.emplace(m, index.size());
  }
}

std::vector<Rational> coordinates(const MonomialIndex& index, const Poly& p) {
  std::vector<Rational> out(index.size(), Rational(0));
  for (const auto& [m, c] : p.terms()) {
    auto it = index.find(m);
    if (it == index.end()) {
      throw std::logic_error("polynomial leaves the indexed monomial space");
    }
    out[it->second] = c;
  }
  return out;
}

RatMatrix scaled_sum(const std::vector<Rational>& weights, const std::vector<RatMatrix>& mats) {
  RatMatrix out(mats.front().rows(), mats.front().cols());
  for (std::size_t r = 0; r < weights.size(); ++r) {
    if (weights[r] == 0) continue;
    for (std::size_t i = 0; i < out.rows(); ++i) {
      for (std::size_t j = 0; j < out.cols(); ++j) {
        out.at(i, j) += weights[r] * mats[r].at(i, j);
      }
    }
  }
  return out;
}

std::string trim(const std::string& text) {
  std::size_t begin = text.find_first_not_of(" \t");
  if (begin == std::string::npos) return "";
  std::size_t end = text.find_last_not_of(" \t");
  return text.substr(begin, end - begin + 1);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string current;
  for (char c : text) {
    if (c == sep) {
      out.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  out.push_back(current);
  return out;
}

}  // namespace

DualPairScene DualPairScene::make(int s, int l) {
  if (s < 1 || l < 1) invalid("scene parameters must be positive");
  DualPairScene scene;
  scene.s = s;
  scene.l = l;
  scene.q.resize(l);
  scene.p.resize(l);
  for (int j = 0; j < l; ++j) {
    for (int alpha = 0; alpha < s; ++alpha) {
      scene.q[j].push_back(base_var(coordinate_name("q", j, alpha)));
      scene.p[j].push_back(fiber_var(coordinate_name("p", j, alpha)));
    }
  }
  return scene;
}

std::vector<Var> DualPairScene::all_vars() const {
  std::vector<Var> out;
  for (const auto& row : q) out.insert(out.end(), row.begin(), row.end());
  for (const auto& row : p) out.insert(out.end(), row.begin(), row.end());
  return out;
}

Poly canonical_bracket(const DualPairScene& scene, const Poly& f, const Poly& g) {
  Poly out = Poly::zero();
  for (int j = 0; j < scene.l; ++j) {
    for (int alpha = 0; alpha < scene.s; ++alpha) {
      const Var& qv = scene.q[j][alpha];
      const Var& pv = scene.p[j][alpha];
      out += f.partial(qv) * g.partial(pv) - f.partial(pv) * g.partial(qv);
    }
  }
  return out;
}

std::string QuadraticInvariant::label() const {
  std::ostringstream out;
  switch (kind) {
    case InvariantKind::QQ:
      out << "q" << j << ".q" << k;
      break;
    case InvariantKind::QP:
      out << "q" << j << ".p" << k;
      break;
    case InvariantKind::PP:
      out << "p" << j << ".p" << k;
      break;
  }
  return out.str();
}

std::vector<QuadraticInvariant> invariant_generators(const DualPairScene& scene) {
  std::vector<QuadraticInvariant> out;
  auto dot = [&](const std::vector<Var>& a, const std::vector<Var>& b) {
    Poly sum = Poly::zero();
    for (int alpha = 0; alpha < scene.s; ++alpha) {
      sum += Poly::variable(a[alpha]) * Poly::variable(b[alpha]);
    }
    return sum;
  };
  for (int j = 0; j < scene.l; ++j) {
    for (int k = j; k < scene.l; ++k) {
      out.push_back({InvariantKind::QQ, j + 1, k + 1, dot(scene.q[j], scene.q[k])});
    }
  }
  for (int j = 0; j < scene.l; ++j) {
    for (int k = 0; k < scene.l; ++k) {
      out.push_back({InvariantKind::QP, j + 1, k + 1, dot(scene.q[j], scene.p[k])});
    }
  }
  for (int j = 0; j < scene.l; ++j) {
    for (int k = j; k < scene.l; ++k) {
      out.push_back({InvariantKind::PP, j + 1, k + 1, dot(scene.p[j], scene.p[k])});
    }
  }
  return out;
}

ClosureTable closure_table(const DualPairScene& scene) {
  ClosureTable table;
  table.basis = invariant_generators(scene);
  const std::size_t dim = table.basis.size();

  std::vector<std::vector<Poly>> brackets(dim, std::vector<Poly>(dim));
  MonomialIndex index;
  for (const auto& inv : table.basis) index_monomials(index, inv.value);
  for (std::size_t a = 0; a < dim; ++a) {
    for (std::size_t b = 0; b < dim; ++b) {
      brackets[a][b] = canonical_bracket(scene, table.basis[a].value, table.basis[b].value);
      index_monomials(index, brackets[a][b]);
    }
  }

  std::vector<std::vector<Rational>> span;
  span.reserve(dim);
  for (const auto& inv : table.basis) span.push_back(coordinates(index, inv.value));

  table.coeffs.assign(dim, std::vector<std::vector<Rational>>(dim));
  for (std::size_t a = 0; a < dim; ++a) {
    for (std::size_t b = 0; b < dim; ++b) {
      auto solution = express_in_span(span, coordinates(index, brackets[a][b]));
      if (!solution) {
        throw std::runtime_error("bracket {" + table.basis[a].label() + ", " +
                                 table.basis[b].label() + "} lies outside the invariant span");
      }
      table.coeffs[a][b] = std::move(*solution);
    }
  }
  return table;
}

std::size_t sp_dimension(int l) {
  return static_cast<std::size_t>(l) * (2 * static_cast<std::size_t>(l) + 1);
}

std::vector<RatMatrix> sp_standard_basis(int l) {
  const std::size_t n = static_cast<std::size_t>(l);
  std::vector<RatMatrix> out;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      RatMatrix x(2 * n, 2 * n);
      x.at(j, k) = 1;
      x.at(n + k, n + j) = -1;
      out.push_back(std::move(x));
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j; k < n; ++k) {
      RatMatrix x(2 * n, 2 * n);
      x.at(j, n + k) = 1;
      x.at(k, n + j) = 1;
      out.push_back(std::move(x));
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j; k < n; ++k) {
      RatMatrix x(2 * n, 2 * n);
      x.at(n + j, k) = 1;
      x.at(n + k, j) = 1;
      out.push_back(std::move(x));
    }
  }
  return out;
}

RatMatrix matrix_commutator(const RatMatrix& x, const RatMatrix& y) { return x * y - y * x; }

bool is_sp_element(const RatMatrix& m) {
  if (m.rows() != m.cols() || m.rows() % 2 != 0) return false;
  const std::size_t n = m.rows() / 2;
  RatMatrix j(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    j.at(i, n + i) = 1;
    j.at(n + i, i) = -1;
  }
  return (m * j).is_symmetric();
}

std::vector<std::vector<Poly>> momentum_symbolic(const DualPairScene& scene) {
  const std::size_t n = static_cast<std::size_t>(scene.l);
  auto dot = [&](const std::vector<Var>& a, const std::vector<Var>& b) {
    Poly sum = Poly::zero();
    for (int alpha = 0; alpha < scene.s; ++alpha) {
      sum += Poly::variable(a[alpha]) * Poly::variable(b[alpha]);
    }
    return sum;
  };
  std::vector<std::vector<Poly>> out(2 * n, std::vector<Poly>(2 * n, Poly::zero()));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      Poly a_jk = dot(scene.q[j], scene.p[k]);
      out[j][k] = a_jk;
      out[n + k][n + j] = -a_jk;
      out[j][n + k] = -dot(scene.q[j], scene.q[k]);
      out[n + j][k] = dot(scene.p[j], scene.p[k]);
    }
  }
  return out;
}

RatMatrix momentum_matrix(const DualPairScene& scene, const std::vector<Rational>& point) {
  std::vector<Var> vars = scene.all_vars();
  if (point.size() != vars.size()) {
    invalid("point must list " + std::to_string(vars.size()) + " coordinates");
  }
  std::map<Var, Rational> env;
  for (std::size_t i = 0; i < vars.size(); ++i) env.emplace(vars[i], point[i]);
  auto symbolic = momentum_symbolic(scene);
  RatMatrix out(symbolic.size(), symbolic.size());
  for (std::size_t i = 0; i < symbolic.size(); ++i) {
    for (std::size_t j = 0; j < symbolic.size(); ++j) {
      out.at(i, j) = symbolic[i][j].evaluate(env);
    }
  }
  return out;
}

Poly momentum_pairing(const DualPairScene& scene, const RatMatrix& x) {
  const std::size_t n = 2 * static_cast<std::size_t>(scene.l);
  if (x.rows() != n || x.cols() != n) invalid("pairing argument has wrong shape");
  auto symbolic = momentum_symbolic(scene);
  Poly out = Poly::zero();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (x.at(j, i) == 0) continue;
      out += symbolic[i][j] * Rational(x.at(j, i) / 2);
    }
  }
  return out;
}

MomentumPropertyReport momentum_property_check(const DualPairScene& scene) {
  MomentumPropertyReport report;
  auto basis = sp_standard_basis(scene.l);
  std::vector<Poly> pairings;
  pairings.reserve(basis.size());
  for (const auto& x : basis) pairings.push_back(momentum_pairing(scene, x));
  for (std::size_t r = 0; r < basis.size() && report.ok; ++r) {
    for (std::size_t t = r + 1; t < basis.size() && report.ok; ++t) {
      Poly lhs = canonical_bracket(scene, pairings[r], pairings[t]);
      Poly rhs = momentum_pairing(scene, matrix_commutator(basis[r], basis[t]));
      ++report.pairs_checked;
      if (lhs != rhs) {
        report.ok = false;
        std::ostringstream out;
        out << "pairing mismatch at basis pair (" << r + 1 << ", " << t + 1 << "): bracket gives "
            << lhs.to_string() << ", commutator pairs to " << rhs.to_string();
        report.witness = out.str();
      }
    }
  }
  return report;
}

SpIsomorphismReport verify_sp_isomorphism(const DualPairScene& scene) {
  SpIsomorphismReport report;
  report.dimension = sp_dimension(scene.l);

  ClosureTable table = closure_table(scene);
  auto basis = sp_standard_basis(scene.l);
  if (table.basis.size() != report.dimension || basis.size() != report.dimension) {
    report.ok = false;
    report.detail = "generator count does not match the matrix algebra dimension";
    return report;
  }

  std::vector<Poly> pairings;
  pairings.reserve(basis.size());
  for (const auto& x : basis) pairings.push_back(momentum_pairing(scene, x));

  MonomialIndex index;
  for (const auto& p : pairings) index_monomials(index, p);
  for (const auto& inv : table.basis) index_monomials(index, inv.value);
  std::vector<std::vector<Rational>> span;
  span.reserve(pairings.size());
  for (const auto& p : pairings) span.push_back(coordinates(index, p));

  // Express every invariant over the basis pairings.
  std::vector<std::vector<Rational>> lambda;
  for (const auto& inv : table.basis) {
    auto row = express_in_span(span, coordinates(index, inv.value));
    if (!row) {
      report.ok = false;
      report.detail = "invariant " + inv.label() + " is not a combination of basis pairings";
      return report;
    }
    lambda.push_back(std::move(*row));
  }

  RatMatrix change(report.dimension, report.dimension);
  for (std::size_t i = 0; i < report.dimension; ++i) {
    for (std::size_t r = 0; r < report.dimension; ++r) {
      change.at(i, r) = lambda[i][r];
    }
  }
  if (change.rank() != report.dimension) {
    report.ok = false;
    report.detail = "change of basis between invariants and pairings is singular";
    return report;
  }

  // Replay the closure table through matrix commutators.
  std::vector<RatMatrix> images;
  images.reserve(report.dimension);
  for (std::size_t i = 0; i < report.dimension; ++i) {
    images.push_back(scaled_sum(lambda[i], basis));
  }
  for (std::size_t a = 0; a < report.dimension; ++a) {
    for (std::size_t b = 0; b < report.dimension; ++b) {
      RatMatrix lhs = matrix_commutator(images[a], images[b]);
      RatMatrix rhs = scaled_sum(table.coeffs[a][b], images);
      if (!(lhs == rhs)) {
        report.ok = false;
        report.detail = "commutator of images disagrees with the bracket table at {" +
                        table.basis[a].label() + ", " + table.basis[b].label() + "}";
        return report;
      }
    }
  }
  return report;
}

RatMatrix hilbert_map(const DualPairScene& scene, const std::vector<Rational>& q_point) {
  const std::size_t expected = static_cast<std::size_t>(scene.s) * scene.l;
  if (q_point.size() != expected) {
    invalid("q-point must list " + std::to_string(expected) + " coordinates");
  }
  RatMatrix out(scene.l, scene.l);
  for (int j = 0; j < scene.l; ++j) {
    for (int k = 0; k < scene.l; ++k) {
      Rational sum(0);
      for (int alpha = 0; alpha < scene.s; ++alpha) {
        sum += q_point[j * scene.s + alpha] * q_point[k * scene.s + alpha];
      }
      out.at(j, k) = sum;
    }
  }
  return out;
}

HilbertPreimage hilbert_preimage(const RatMatrix& m, int s) {
  if (m.rows() != m.cols()) invalid("input matrix must be square");
  if (!m.is_symmetric()) invalid("input matrix must be symmetric");
  if (s < 1) invalid("ambient dimension must be positive");

  HilbertPreimage out;
  Ldlt f = ldlt_decompose(m);
  if (!f.psd) {
    out.status = HilbertPreimage::Status::infeasible;
    out.infeasible_reason = "indefinite";
    out.witness = f.witness;
    out.witness_value = f.witness_value;
    return out;
  }
  out.rank = f.rank;
  if (f.rank > static_cast<std::size_t>(s)) {
    out.status = HilbertPreimage::Status::infeasible;
    out.infeasible_reason = "rank_exceeds_s";
    return out;
  }

  const std::size_t l = m.rows();
  std::vector<Rational> roots(f.rank);
  bool exact = true;
  for (std::size_t i = 0; i < f.rank && exact; ++i) {
    exact = rational_sqrt(f.pivot[i], roots[i]);
  }

  if (exact) {
    out.status = HilbertPreimage::Status::exact;
    out.vectors.assign(l, std::vector<Rational>(static_cast<std::size_t>(s), Rational(0)));
    for (std::size_t j = 0; j < l; ++j) {
      for (std::size_t i = 0; i < f.rank; ++i) {
        out.vectors[j][i] = roots[i] * f.column[i][j];
      }
    }
    // The Gram identity is exact by construction; verify it anyway.
    for (std::size_t j = 0; j < l; ++j) {
      for (std::size_t k = 0; k < l; ++k) {
        Rational sum(0);
        for (int alpha = 0; alpha < s; ++alpha) {
          sum += out.vectors[j][alpha] * out.vectors[k][alpha];
        }
        if (sum != m.at(j, k)) throw std::logic_error("exact Gram reconstruction failed");
      }
    }
    out.residual = Rational(0);
    out.residual_ok = true;
    return out;
  }

  out.status = HilbertPreimage::Status::numeric;
  out.vectors_num.assign(l, std::vector<double>(static_cast<std::size_t>(s), 0.0));
  for (std::size_t j = 0; j < l; ++j) {
    for (std::size_t i = 0; i < f.rank; ++i) {
      out.vectors_num[j][i] = std::sqrt(to_double(f.pivot[i])) * to_double(f.column[i][j]);
    }
  }
  // Doubles are dyadic rationals, so the residual of the rounded vectors is
  // computable exactly.
  Rational residual(0);
  for (std::size_t j = 0; j < l; ++j) {
    for (std::size_t k = 0; k < l; ++k) {
      Rational sum(0);
      for (int alpha = 0; alpha < s; ++alpha) {
        sum += rational_from_double(out.vectors_num[j][alpha]) *
               rational_from_double(out.vectors_num[k][alpha]);
      }
      Rational gap = m.at(j, k) - sum;
      if (gap < 0) gap = -gap;
      if (gap > residual) residual = gap;
    }
  }
  out.residual = residual;
  out.residual_ok = residual <= make_rational(1, 1000000000000L);
  return out;
}

DeficiencyReport sal_deficiency_report(const DualPairScene& scene) {
  DeficiencyReport report;
  auto gens = invariant_generators(scene);

  MonomialIndex index;
  for (const auto& g : gens) index_monomials(index, g.value);

  std::vector<std::vector<Rational>> span;
  std::vector<const QuadraticInvariant*> targets;
  for (const auto& g : gens) {
    if (g.kind == InvariantKind::PP) {
      targets.push_back(&g);
    } else {
      span.push_back(coordinates(index, g.value));
      ++report.qq_qp_count;
    }
  }
  report.pp_count = targets.size();

  for (const auto* t : targets) {
    if (express_in_span(span, coordinates(index, t->value))) {
      report.ok = false;
      report.detail = t->label() + " unexpectedly lies in the span";
      return report;
    }
    report.certified_missing.push_back(t->label());
  }

  for (const auto& g : gens) {
    if (g.kind != InvariantKind::QP) continue;
    if (!express_in_span(span, coordinates(index, g.value))) {
      report.qp_members_ok = false;
      report.detail = g.label() + " unexpectedly escapes the span";
      return report;
    }
  }

  Poly kinetic = Poly::zero();
  for (const auto& g : gens) {
    if (g.kind == InvariantKind::PP && g.j == g.k) kinetic += g.value;
  }
  report.kinetic_missing = !express_in_span(span, coordinates(index, kinetic)).has_value();
  if (!report.kinetic_missing) {
    report.ok = false;
    report.detail = "the sum of squared momenta unexpectedly lies in the span";
  }
  return report;
}

std::vector<Rational> parse_point(const std::string& text) {
  std::vector<Rational> out;
  for (const std::string& piece : split(text, ',')) {
    std::string entry = trim(piece);
    if (entry.empty()) invalid("empty coordinate in point '" + text + "'");
    out.push_back(parse_rational(entry));
  }
  return out;
}

RatMatrix parse_matrix(const std::string& text) {
  std::vector<std::vector<Rational>> rows;
  for (const std::string& row_text : split(text, ';')) {
    rows.push_back(parse_point(row_text));
    if (rows.back().size() != rows.front().size()) {
      invalid("matrix rows have inconsistent lengths");
    }
  }
  RatMatrix out(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      out.at(i, j) = rows[i][j];
    }
  }
  return out;
}

}  // namespace rinehart
