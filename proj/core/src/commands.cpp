#include "rinehart/commands.hpp"

#include <chrono>
#include <cstdio>
#include <memory>
#include <sstream>
#include <stdexcept>

#include "rinehart/dsl.hpp"
#include "rinehart/dual_pair.hpp"
#include "rinehart/extensions.hpp"
#include "rinehart/presets.hpp"
#include "rinehart/reductive.hpp"
#include "rinehart/tautological.hpp"

namespace rinehart {
namespace {

constexpr std::size_t kSampleCount = 64;

/// Thrown for problems with the invocation itself (not verdict failures).
/// `rendered` carries already-formatted diagnostics (with positions); when it is
/// empty the plain `message` gets an "error:" prefix instead.
struct UsageError {
  std::string message;
  std::string rendered;
};

[[noreturn]] void usage(const std::string& message) { throw UsageError{message, {}}; }

std::string fmt_double(double x) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", x);
  return buffer;
}

std::string fmt_double_short(double x) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.3e", x);
  return buffer;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string render_indices(const std::vector<std::size_t>& indices) {
  std::vector<std::string> parts;
  for (std::size_t idx : indices) parts.push_back(std::to_string(idx));
  return "(" + join(parts, ", ") + ")";
}

std::string render_matrix_row(const RatMatrix& m, std::size_t i) {
  std::vector<std::string> parts;
  for (std::size_t j = 0; j < m.cols(); ++j) parts.push_back(to_string(m.at(i, j)));
  return join(parts, " ");
}

std::vector<std::string> render_matrix(const RatMatrix& m) {
  std::vector<std::string> rows;
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(render_matrix_row(m, i));
  return rows;
}

std::string render_anchor_row(const LieRinehartPresentation& pres, std::size_t j) {
  Poly rendered = Poly::zero();
  for (std::size_t s = 0; s < pres.base_dim(); ++s) {
    rendered += pres.anchor[j][s] * Poly::variable(fiber_var("d" + pres.base_vars[s].name));
  }
  return rendered.to_string();
}

std::vector<std::string> render_presentation(const LieRinehartPresentation& pres) {
  std::vector<std::string> lines;
  {
    std::vector<std::string> names;
    for (const Var& v : pres.base_vars) names.push_back(v.name);
    lines.push_back("base: " + (names.empty() ? "(none)" : join(names, ", ")));
  }
  {
    std::vector<std::string> names;
    for (const Var& v : pres.l_basis) names.push_back(v.name);
    lines.push_back("basis: " + (names.empty() ? "(none)" : join(names, ", ")));
  }
  for (std::size_t j = 0; j < pres.fiber_dim(); ++j) {
    lines.push_back("anchor " + pres.l_basis[j].name + " -> " + render_anchor_row(pres, j));
  }
  for (std::size_t j = 0; j < pres.fiber_dim(); ++j) {
    for (std::size_t k = j + 1; k < pres.fiber_dim(); ++k) {
      Poly b = pres.basis_bracket(j, k);
      if (b.is_zero()) continue;
      lines.push_back("[" + pres.l_basis[j].name + "," + pres.l_basis[k].name + "] = " +
                      b.to_string());
    }
  }
  return lines;
}

void witness_facts(ReportCheck& check, const AxiomWitness& witness) {
  check.fact("witness_indices", render_indices(witness.indices));
  check.fact("defect", witness.defect.to_string());
  check.fact("description", witness.description);
}

std::vector<ReportCheck> axiom_checks(const LieRinehartPresentation& pres) {
  AxiomReport report = check_axioms(pres);
  ReportCheck jacobi{"jacobi", report.jacobi_ok ? "pass" : "fail", {}};
  if (report.jacobi_witness) witness_facts(jacobi, *report.jacobi_witness);
  ReportCheck anchor{"anchor_morphism", report.anchor_morphism_ok ? "pass" : "fail", {}};
  if (report.anchor_witness) witness_facts(anchor, *report.anchor_witness);
  return {jacobi, anchor};
}

ReportCheck law_check(const SampledLawReport& law, const std::string& suffix) {
  ReportCheck check{law.law + suffix, law.ok ? "pass" : "fail", {}};
  check.fact("samples", std::to_string(law.samples));
  if (!law.ok) {
    check.fact_list("witness_elements", law.witness_elements);
    check.fact("defect", law.defect.to_string());
  }
  return check;
}

ReportCheck potential_check(const ContextPtr& ctx) {
  PotentialReport report = check_potential(ctx);
  ReportCheck check{"poisson_potential", report.ok ? "pass" : "fail", {}};
  check.fact("pairs_checked", std::to_string(report.pairs_checked));
  if (report.witness) {
    check.fact("witness_pair", report.witness->x_text + ", " + report.witness->y_text);
    check.fact("expected", report.witness->expected.to_string());
    check.fact("actual", report.witness->actual.to_string());
  }
  return check;
}

ReportCheck reconstruct_check(const ContextPtr& ctx) {
  LieRinehartPresentation rebuilt = reconstruct(ctx);
  bool equal = rebuilt == *ctx;
  ReportCheck check{"reconstruct_roundtrip", equal ? "pass" : "fail", {}};
  check.fact_list("recovered", render_presentation(rebuilt));
  return check;
}

std::vector<ReportCheck> algebra_checks(const ContextPtr& ctx, SampleRng& rng) {
  std::vector<ReportCheck> checks = axiom_checks(*ctx);
  for (const SampledLawReport& law : check_bracket_laws(ctx, rng, kSampleCount)) {
    checks.push_back(law_check(law, "_sampled"));
  }
  checks.push_back(potential_check(ctx));
  checks.push_back(reconstruct_check(ctx));
  return checks;
}

std::vector<std::string> render_vertical_tensor(
    const LieRinehartPresentation& dprime, const LieRinehartPresentation& prime,
    const std::vector<std::vector<std::vector<Poly>>>& tensor, bool alternating) {
  std::vector<std::string> lines;
  for (std::size_t j = 0; j < tensor.size(); ++j) {
    for (std::size_t k = 0; k < tensor[j].size(); ++k) {
      if (alternating && k <= j) continue;
      Poly value = Poly::zero();
      for (std::size_t i = 0; i < tensor[j][k].size(); ++i) {
        value += tensor[j][k][i] * Poly::variable(prime.l_basis[i]);
      }
      if (value.is_zero()) continue;
      const std::string right =
          alternating ? dprime.l_basis[k].name : prime.l_basis[k].name;
      lines.push_back("[" + dprime.l_basis[j].name + "," + right + "] = " + value.to_string());
    }
  }
  if (lines.empty()) lines.push_back("0");
  return lines;
}

std::vector<ReportCheck> extension_checks(const ExtensionData& ext, SampleRng& rng) {
  std::vector<ReportCheck> checks;
  LieRinehartPresentation total = build_total(ext);
  for (ReportCheck& check : axiom_checks(total)) checks.push_back(std::move(check));

  ExtensionIdentitiesReport identities = check_extension_identities(ext, rng, kSampleCount / 4);
  for (const IdentityCheck& identity : identities.checks) {
    ReportCheck check{identity.name, identity.ok ? "pass" : "fail", {}};
    if (!identity.ok) check.fact("witness", identity.witness);
    checks.push_back(std::move(check));
  }

  ConnectionMap conn = canonical_inclusion(
      total, canonical_split(ext.l_prime.fiber_dim(), total.fiber_dim()));
  auto computed = curvature_of(total, conn);
  ReportCheck curvature{"curvature_roundtrip", computed == ext.omega ? "pass" : "fail", {}};
  curvature.fact_list("curvature",
                      render_vertical_tensor(ext.l_double_prime, ext.l_prime, computed, true));
  checks.push_back(std::move(curvature));

  ExtensionData rebuilt = reconstruct_extension(total, conn);
  bool pieces_equal = rebuilt.l_prime == ext.l_prime &&
                      rebuilt.l_double_prime == ext.l_double_prime &&
                      rebuilt.nabla == ext.nabla && rebuilt.omega == ext.omega;
  bool total_equal = build_total(rebuilt) == total;
  ReportCheck roundtrip{"reconstruct_roundtrip",
                        pieces_equal && total_equal ? "pass" : "fail", {}};
  roundtrip.fact("components_match", pieces_equal ? "true" : "false");
  roundtrip.fact("total_match", total_equal ? "true" : "false");
  checks.push_back(std::move(roundtrip));
  return checks;
}

std::vector<ReportCheck> scene_checks(const DualPairScene& scene) {
  std::vector<ReportCheck> checks;

  ReportCheck closure{"closure", "pass", {}};
  closure.fact("generators", std::to_string(sp_dimension(scene.l)));
  try {
    ClosureTable table = closure_table(scene);
    std::vector<std::string> lines;
    for (std::size_t a = 0; a < table.basis.size(); ++a) {
      for (std::size_t b = a + 1; b < table.basis.size(); ++b) {
        std::vector<std::string> parts;
        for (std::size_t u = 0; u < table.basis.size(); ++u) {
          const Rational& coeff = table.coeffs[a][b][u];
          if (coeff == 0) continue;
          std::string part = table.basis[u].label();
          if (coeff != 1) part = to_string(coeff) + "*" + part;
          parts.push_back(part);
        }
        lines.push_back("{" + table.basis[a].label() + ", " + table.basis[b].label() + "} = " +
                        (parts.empty() ? "0" : join(parts, " + ")));
      }
    }
    closure.fact_list("table", lines);
  } catch (const std::runtime_error& problem) {
    closure.verdict = "fail";
    closure.fact("reason", problem.what());
  }
  checks.push_back(std::move(closure));

  SpIsomorphismReport iso = verify_sp_isomorphism(scene);
  ReportCheck iso_check{"sp_isomorphism", iso.ok ? "pass" : "fail", {}};
  iso_check.fact("dimension", std::to_string(iso.dimension));
  if (!iso.ok) iso_check.fact("reason", iso.detail);
  checks.push_back(std::move(iso_check));

  MomentumPropertyReport momentum = momentum_property_check(scene);
  ReportCheck momentum_check{"momentum_pairing_morphism", momentum.ok ? "pass" : "fail", {}};
  momentum_check.fact("pairs_checked", std::to_string(momentum.pairs_checked));
  if (!momentum.ok) momentum_check.fact("witness", momentum.witness);
  checks.push_back(std::move(momentum_check));

  DeficiencyReport deficiency = sal_deficiency_report(scene);
  ReportCheck deficiency_check{"span_deficiency", deficiency.ok ? "pass" : "fail", {}};
  deficiency_check.fact("span_generators", std::to_string(deficiency.qq_qp_count));
  deficiency_check.fact_list("certified_outside", deficiency.certified_missing);
  deficiency_check.fact("qp_inside", deficiency.qp_members_ok ? "true" : "false");
  deficiency_check.fact("kinetic_energy_outside", deficiency.kinetic_missing ? "true" : "false");
  if (!deficiency.ok) deficiency_check.fact("reason", deficiency.detail);
  checks.push_back(std::move(deficiency_check));

  return checks;
}

std::vector<ReportCheck> reductive_checks(const ReductivePair& pair, int degree_bound) {
  std::vector<ReportCheck> checks;
  ReductiveReport report = check_reductive(pair);
  auto law = [&](const char* name, bool ok) {
    ReportCheck check{name, ok ? "pass" : "fail", {}};
    if (!ok && report.witness) {
      check.fact("witness", report.witness->description);
    }
    checks.push_back(std::move(check));
  };
  law("h_subalgebra", report.h_subalgebra);
  law("h_action_preserves_q", report.h_q_into_q);
  law("q_brackets_into_h", report.q_q_into_h);

  if (report.h_q_into_q) {
    GapReport gap = homogeneous_invariant_gap(pair, degree_bound);
    ReportCheck gap_check{"restriction_gap", "pass", {}};
    gap_check.fact("q_invariant_dim", std::to_string(gap.q_invariant_dim));
    std::vector<std::string> rows;
    for (const GapRow& row : gap.rows) {
      rows.push_back("degree " + std::to_string(row.degree) + ": invariants " +
                     std::to_string(row.invariant_dim) + ", restricted " +
                     std::to_string(row.restricted_dim));
    }
    gap_check.fact_list("dimensions", rows);
    gap_check.fact("first_gap_degree",
                   gap.first_gap_degree ? std::to_string(*gap.first_gap_degree) : "none");
    checks.push_back(std::move(gap_check));
  }
  return checks;
}

/// A resolved declaration out of a parsed document.
struct Resolved {
  std::shared_ptr<const LieRinehartPresentation> algebra;
  const ExtensionData* extension = nullptr;
  const SceneDecl* scene = nullptr;
};

Resolved resolve_target(const DslDocument& doc, const std::string& target) {
  Resolved out;
  if (target.empty()) {
    std::size_t count = doc.algebras.size() + doc.extensions.size() + doc.scenes.size();
    if (count == 0) usage("the file declares nothing to act on");
    if (count > 1) {
      usage("the file declares " + std::to_string(count) +
            " targets; pick one with --target NAME");
    }
    if (!doc.algebras.empty()) out.algebra = doc.algebras.front();
    if (!doc.extensions.empty()) out.extension = &doc.extensions.front();
    if (!doc.scenes.empty()) out.scene = &doc.scenes.front();
    return out;
  }
  out.algebra = doc.find_algebra(target);
  out.extension = doc.find_extension(target);
  out.scene = doc.find_scene(target);
  if (!out.algebra && !out.extension && !out.scene) {
    usage("no declaration named '" + target + "' in the file");
  }
  return out;
}

std::vector<ReportCheck> checks_for_target(const Resolved& target, SampleRng& rng,
                                           int degree_bound) {
  if (target.algebra) return algebra_checks(target.algebra, rng);
  if (target.extension) return extension_checks(*target.extension, rng);
  DualPairScene scene = DualPairScene::make(target.scene->s, target.scene->l);
  (void)degree_bound;
  return scene_checks(scene);
}

ReportCheck bracket_command_check(const ContextPtr& ctx, const std::string& lhs_text,
                                  const std::string& rhs_text) {
  std::map<std::string, Var> env = expression_env(*ctx);
  Poly lhs = parse_poly_expression(lhs_text, env);
  Poly rhs = parse_poly_expression(rhs_text, env);
  BracketEngine engine(ctx);
  ReportCheck check{"bracket", "pass", {}};
  check.fact("lhs", lhs.to_string());
  check.fact("rhs", rhs.to_string());
  check.fact("result", engine.bracket(lhs, rhs).to_string());
  return check;
}

LieRinehartPresentation permute_generators(const LieRinehartPresentation& pres,
                                           const std::vector<std::size_t>& order) {
  LieRinehartPresentation out;
  out.name = pres.name;
  out.base_vars = pres.base_vars;
  const std::size_t m = order.size();
  for (std::size_t j : order) out.l_basis.push_back(pres.l_basis[j]);
  out.anchor.resize(m);
  for (std::size_t j = 0; j < m; ++j) out.anchor[j] = pres.anchor[order[j]];
  out.structure.assign(m,
                       std::vector<std::vector<Poly>>(m, std::vector<Poly>(m, Poly::zero())));
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t k = 0; k < m; ++k) {
      for (std::size_t i = 0; i < m; ++i) {
        out.structure[j][k][i] = pres.structure[order[j]][order[k]][order[i]];
      }
    }
  }
  return out;
}

std::vector<ReportCheck> reconstruct_extension_checks(const Resolved& target,
                                                      const std::vector<std::string>& prime_part) {
  std::vector<ReportCheck> checks;
  if (target.extension) {
    const ExtensionData& ext = *target.extension;
    LieRinehartPresentation total = build_total(ext);
    ConnectionMap conn = canonical_inclusion(
        total, canonical_split(ext.l_prime.fiber_dim(), total.fiber_dim()));
    ExtensionData rebuilt = reconstruct_extension(total, conn);
    auto match = [&](const char* name, bool ok) {
      checks.push_back(ReportCheck{name, ok ? "pass" : "fail", {}});
    };
    match("vertical_match", rebuilt.l_prime == ext.l_prime);
    match("quotient_match", rebuilt.l_double_prime == ext.l_double_prime);
    match("connection_match", rebuilt.nabla == ext.nabla);
    match("curvature_match", rebuilt.omega == ext.omega);
    match("total_roundtrip", build_total(rebuilt) == total);
    ReportCheck components{"components", "pass", {}};
    components.fact_list("vertical", render_presentation(rebuilt.l_prime));
    components.fact_list("quotient", render_presentation(rebuilt.l_double_prime));
    components.fact_list("connection",
                         render_vertical_tensor(rebuilt.l_double_prime, rebuilt.l_prime,
                                                rebuilt.nabla, false));
    components.fact_list("curvature",
                         render_vertical_tensor(rebuilt.l_double_prime, rebuilt.l_prime,
                                                rebuilt.omega, true));
    checks.push_back(std::move(components));
    return checks;
  }

  // Algebra target: the vertical part comes from --prime names.
  const LieRinehartPresentation& total = *target.algebra;
  if (prime_part.empty()) {
    usage("reconstruct-extension on an algebra needs --prime NAME[,NAME...]");
  }
  BasisSplit split;
  std::vector<bool> vertical(total.fiber_dim(), false);
  for (const std::string& name : prime_part) {
    auto idx = total.fiber_index(fiber_var(name));
    if (!idx) usage("no generator named '" + name + "' in '" + total.name + "'");
    vertical[*idx] = true;
    split.prime.push_back(*idx);
  }
  for (std::size_t j = 0; j < total.fiber_dim(); ++j) {
    if (!vertical[j]) split.double_prime.push_back(j);
  }
  ConnectionMap conn = canonical_inclusion(total, split);
  try {
    ExtensionData rebuilt = reconstruct_extension(total, conn);
    std::vector<std::size_t> order = conn.split.prime;
    order.insert(order.end(), conn.split.double_prime.begin(), conn.split.double_prime.end());
    bool roundtrip = build_total(rebuilt) == permute_generators(total, order);
    checks.push_back(ReportCheck{"split_preconditions", "pass", {}});
    ReportCheck components{"components", "pass", {}};
    components.fact_list("vertical", render_presentation(rebuilt.l_prime));
    components.fact_list("quotient", render_presentation(rebuilt.l_double_prime));
    components.fact_list("connection",
                         render_vertical_tensor(rebuilt.l_double_prime, rebuilt.l_prime,
                                                rebuilt.nabla, false));
    components.fact_list("curvature",
                         render_vertical_tensor(rebuilt.l_double_prime, rebuilt.l_prime,
                                                rebuilt.omega, true));
    checks.push_back(std::move(components));
    checks.push_back(
        ReportCheck{"total_roundtrip", roundtrip ? "pass" : "fail", {}});
  } catch (const std::invalid_argument& problem) {
    ReportCheck failed{"split_preconditions", "fail", {}};
    failed.fact("reason", problem.what());
    checks.push_back(std::move(failed));
  }
  return checks;
}

std::vector<ReportCheck> hilbert_checks(const CommandOptions& opts) {
  std::vector<ReportCheck> checks;
  if (!opts.matrix.empty()) {
    RatMatrix m = parse_matrix(opts.matrix);
    if (m.rows() != m.cols()) usage("the matrix must be square");
    if (!m.is_symmetric()) usage("the matrix must be symmetric");
    HilbertPreimage pre = hilbert_preimage(m, opts.s);
    ReportCheck check{"gram_preimage", "pass", {}};
    check.fact_list("matrix", render_matrix(m));
    check.fact("ambient_dimension", std::to_string(opts.s));
    switch (pre.status) {
      case HilbertPreimage::Status::exact: {
        check.fact("status", "exact");
        check.fact("rank", std::to_string(pre.rank));
        std::vector<std::string> rows;
        for (const auto& vec : pre.vectors) {
          std::vector<std::string> parts;
          for (const Rational& entry : vec) parts.push_back(to_string(entry));
          rows.push_back(join(parts, " "));
        }
        check.fact_list("vectors", rows);
        break;
      }
      case HilbertPreimage::Status::numeric: {
        check.verdict = pre.residual_ok ? "pass" : "fail";
        check.fact("status", "numeric");
        check.fact("rank", std::to_string(pre.rank));
        std::vector<std::string> rows;
        for (const auto& vec : pre.vectors_num) {
          std::vector<std::string> parts;
          for (double entry : vec) parts.push_back(fmt_double(entry));
          rows.push_back(join(parts, " "));
        }
        check.fact_list("vectors", rows);
        check.fact("residual", fmt_double_short(to_double(pre.residual)));
        check.fact("residual_exact", to_string(pre.residual));
        check.fact("residual_within_1e-12", pre.residual_ok ? "true" : "false");
        break;
      }
      case HilbertPreimage::Status::infeasible: {
        check.verdict = "infeasible";
        check.fact("status", "infeasible");
        check.fact("reason", pre.infeasible_reason);
        if (pre.infeasible_reason == "indefinite") {
          std::vector<std::string> parts;
          for (const Rational& entry : pre.witness) parts.push_back(to_string(entry));
          check.fact("witness_direction", join(parts, " "));
          check.fact("witness_value", to_string(pre.witness_value));
        } else {
          check.fact("rank", std::to_string(pre.rank));
        }
        break;
      }
    }
    checks.push_back(std::move(check));
    return checks;
  }

  if (opts.point.empty()) usage("hilbert needs --point or --matrix");
  DualPairScene scene = DualPairScene::make(opts.s, opts.l);
  std::vector<Rational> point = parse_point(opts.point);
  RatMatrix gram = hilbert_map(scene, point);
  ReportCheck check{"gram_of_point", "pass", {}};
  check.fact_list("gram", render_matrix(gram));
  HilbertPreimage pre = hilbert_preimage(gram, opts.s);
  bool feasible = pre.status != HilbertPreimage::Status::infeasible;
  check.fact("preimage_status",
             pre.status == HilbertPreimage::Status::exact
                 ? "exact"
                 : (pre.status == HilbertPreimage::Status::numeric ? "numeric" : "infeasible"));
  check.fact("rank", std::to_string(pre.rank));
  if (!feasible) check.verdict = "fail";
  if (pre.status == HilbertPreimage::Status::numeric) {
    check.fact("residual", fmt_double_short(to_double(pre.residual)));
    if (!pre.residual_ok) check.verdict = "fail";
  }
  checks.push_back(std::move(check));
  return checks;
}

std::vector<ReportCheck> momentum_checks(const CommandOptions& opts) {
  if (opts.point.empty()) usage("momentum needs --point");
  DualPairScene scene = DualPairScene::make(opts.s, opts.l);
  std::vector<Rational> point = parse_point(opts.point);
  RatMatrix mu = momentum_matrix(scene, point);

  std::vector<ReportCheck> checks;
  ReportCheck value{"momentum_matrix", "pass", {}};
  value.fact_list("matrix", render_matrix(mu));
  checks.push_back(std::move(value));

  ReportCheck membership{"sp_membership", is_sp_element(mu) ? "pass" : "fail", {}};
  checks.push_back(std::move(membership));

  const std::size_t bound =
      std::min<std::size_t>(static_cast<std::size_t>(opts.s), 2 * static_cast<std::size_t>(opts.l));
  std::size_t rank = mu.rank();
  ReportCheck rank_check{"rank_bound", rank <= bound ? "pass" : "fail", {}};
  rank_check.fact("rank", std::to_string(rank));
  rank_check.fact("bound", std::to_string(bound));
  checks.push_back(std::move(rank_check));

  MomentumPropertyReport property = momentum_property_check(scene);
  ReportCheck property_check{"pairing_morphism", property.ok ? "pass" : "fail", {}};
  property_check.fact("pairs_checked", std::to_string(property.pairs_checked));
  if (!property.ok) property_check.fact("witness", property.witness);
  checks.push_back(std::move(property_check));
  return checks;
}

std::vector<ReportCheck> homogeneous_demo_checks(const CommandOptions& opts) {
  ReductivePair pair = [&]() {
    if (opts.preset == "so3-so2") return presets::so3_so2();
    if (opts.preset == "gxg-so3") return presets::double_so3();
    if (opts.preset == "borel") return presets::borel_pair();
    usage("unknown homogeneous preset '" + opts.preset +
          "' (available: so3-so2, gxg-so3, borel)");
  }();
  return reductive_checks(pair, opts.degree_bound);
}

DslDocument parse_or_fail(const Invocation& inv) {
  ParseResult parsed = parse_document(inv.file_text);
  if (!parsed.document) {
    std::ostringstream out;
    for (const Diagnostic& diagnostic : parsed.diagnostics) {
      out << diagnostic.render(inv.file_path) << "\n";
    }
    throw UsageError{"", out.str()};
  }
  return std::move(*parsed.document);
}

Outcome run_dispatch(const Invocation& inv) {
  Outcome outcome;
  Report report;
  report.command = inv.command;
  report.seed = inv.opts.seed;
  SampleRng rng(inv.opts.seed);

  const bool file_based = inv.command == "check" || inv.command == "bracket" ||
                          inv.command == "reconstruct" || inv.command == "build-extension" ||
                          inv.command == "curvature" ||
                          inv.command == "reconstruct-extension" || inv.command == "run";
  DslDocument doc;
  if (file_based) {
    report.input_kind = "file";
    report.input_name = inv.file_path;
    report.input_digest = "fnv1a64:" + fnv1a64_hex(inv.file_text);
    doc = parse_or_fail(inv);
  } else {
    report.input_kind = "demo";
    report.input_name = inv.command == "demo" ? inv.demo_kind : inv.command;
  }

  auto started = std::chrono::steady_clock::now();

  if (inv.command == "check") {
    Resolved target = resolve_target(doc, inv.opts.target);
    report.checks = checks_for_target(target, rng, inv.opts.degree_bound);
  } else if (inv.command == "bracket") {
    if (inv.opts.exprs.size() != 2) usage("bracket takes exactly two expressions");
    Resolved target = resolve_target(doc, inv.opts.target);
    ContextPtr ctx;
    if (target.algebra) {
      ctx = target.algebra;
    } else if (target.extension) {
      ctx = std::make_shared<const LieRinehartPresentation>(build_total(*target.extension));
    } else {
      usage("bracket needs an algebra or extension target");
    }
    report.checks.push_back(bracket_command_check(ctx, inv.opts.exprs[0], inv.opts.exprs[1]));
  } else if (inv.command == "reconstruct") {
    Resolved target = resolve_target(doc, inv.opts.target);
    if (!target.algebra) usage("reconstruct needs an algebra target");
    report.checks.push_back(reconstruct_check(target.algebra));
  } else if (inv.command == "build-extension") {
    Resolved target = resolve_target(doc, inv.opts.target);
    if (!target.extension) usage("build-extension needs an extension target");
    LieRinehartPresentation total = build_total(*target.extension);
    ReportCheck assembly{"assembly", "pass", {}};
    assembly.fact_list("total", render_presentation(total));
    report.checks.push_back(std::move(assembly));
    for (ReportCheck& check : axiom_checks(total)) report.checks.push_back(std::move(check));
  } else if (inv.command == "curvature") {
    Resolved target = resolve_target(doc, inv.opts.target);
    if (!target.extension) usage("curvature needs an extension target");
    const ExtensionData& ext = *target.extension;
    LieRinehartPresentation total = build_total(ext);
    ConnectionMap conn = canonical_inclusion(
        total, canonical_split(ext.l_prime.fiber_dim(), total.fiber_dim()));
    auto computed = curvature_of(total, conn);
    ReportCheck curvature{"curvature", "pass", {}};
    curvature.fact_list("curvature", render_vertical_tensor(ext.l_double_prime, ext.l_prime,
                                                            computed, true));
    report.checks.push_back(std::move(curvature));
    report.checks.push_back(
        ReportCheck{"declared_match", computed == ext.omega ? "pass" : "fail", {}});
  } else if (inv.command == "reconstruct-extension") {
    Resolved target = resolve_target(doc, inv.opts.target);
    if (!target.algebra && !target.extension) {
      usage("reconstruct-extension needs an algebra or extension target");
    }
    report.checks = reconstruct_extension_checks(target, inv.opts.prime_part);
  } else if (inv.command == "run") {
    if (doc.commands.empty()) usage("the file contains no command statements");
    for (const CommandDecl& cmd : doc.commands) {
      Resolved target;
      try {
        target = resolve_target(doc, cmd.target);
      } catch (const UsageError& problem) {
        throw UsageError{"", inv.file_path + ":" + std::to_string(cmd.line) + ":" +
                                 std::to_string(cmd.col) + ": error: " + problem.message + "\n"};
      }
      std::vector<ReportCheck> checks;
      if (cmd.verb == "check") {
        checks = checks_for_target(target, rng, inv.opts.degree_bound);
      } else if (cmd.verb == "bracket") {
        ContextPtr ctx =
            target.algebra
                ? target.algebra
                : std::make_shared<const LieRinehartPresentation>(build_total(*target.extension));
        checks.push_back(bracket_command_check(ctx, cmd.args[0], cmd.args[1]));
      } else if (cmd.verb == "reconstruct") {
        if (!target.algebra) usage("reconstruct needs an algebra target");
        checks.push_back(reconstruct_check(target.algebra));
      } else if (cmd.verb == "build_extension") {
        if (!target.extension) usage("build_extension needs an extension target");
        LieRinehartPresentation total = build_total(*target.extension);
        ReportCheck assembly{"assembly", "pass", {}};
        assembly.fact_list("total", render_presentation(total));
        checks.push_back(std::move(assembly));
        for (ReportCheck& check : axiom_checks(total)) checks.push_back(std::move(check));
      } else if (cmd.verb == "curvature") {
        if (!target.extension) usage("curvature needs an extension target");
        const ExtensionData& ext = *target.extension;
        LieRinehartPresentation total = build_total(ext);
        ConnectionMap conn = canonical_inclusion(
            total, canonical_split(ext.l_prime.fiber_dim(), total.fiber_dim()));
        auto computed = curvature_of(total, conn);
        ReportCheck curvature{"curvature", "pass", {}};
        curvature.fact_list("curvature", render_vertical_tensor(ext.l_double_prime, ext.l_prime,
                                                                computed, true));
        checks.push_back(std::move(curvature));
        checks.push_back(
            ReportCheck{"declared_match", computed == ext.omega ? "pass" : "fail", {}});
      } else if (cmd.verb == "reconstruct_extension") {
        checks = reconstruct_extension_checks(target, {});
      } else {
        usage("unknown command verb '" + cmd.verb + "'");
      }
      for (ReportCheck& check : checks) {
        check.name = cmd.verb + " " + cmd.target + ": " + check.name;
        report.checks.push_back(std::move(check));
      }
    }
  } else if (inv.command == "demo") {
    if (inv.demo_kind == "dual-pair") {
      report.param("s", std::to_string(inv.opts.s));
      report.param("l", std::to_string(inv.opts.l));
      report.checks = scene_checks(DualPairScene::make(inv.opts.s, inv.opts.l));
    } else if (inv.demo_kind == "so3-r3") {
      report.param("s", "3");
      report.param("l", "1");
      report.checks = scene_checks(DualPairScene::make(3, 1));
      ReportCheck note{"domain_note", "pass", {}};
      note.fact("note",
                "the geometric picture behind this scene removes the origin of the "
                "3-space; that restriction matters only for smooth-manifold statements, "
                "while every polynomial identity certified here is insensitive to it");
      report.checks.push_back(std::move(note));
    } else if (inv.demo_kind == "homogeneous") {
      report.input_name = "homogeneous:" + inv.opts.preset;
      report.param("preset", inv.opts.preset);
      report.param("degree_bound", std::to_string(inv.opts.degree_bound));
      report.checks = homogeneous_demo_checks(inv.opts);
    } else {
      usage("unknown demo '" + inv.demo_kind + "' (available: dual-pair, so3-r3, homogeneous)");
    }
  } else if (inv.command == "hilbert") {
    report.param("s", std::to_string(inv.opts.s));
    if (inv.opts.matrix.empty()) report.param("l", std::to_string(inv.opts.l));
    report.checks = hilbert_checks(inv.opts);
  } else if (inv.command == "momentum") {
    report.param("s", std::to_string(inv.opts.s));
    report.param("l", std::to_string(inv.opts.l));
    report.param("point", inv.opts.point);
    report.checks = momentum_checks(inv.opts);
  } else {
    usage("unknown command '" + inv.command + "'");
  }

  if (inv.opts.timing) {
    auto elapsed = std::chrono::steady_clock::now() - started;
    report.timing_ms =
        std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(elapsed).count();
  }
  outcome.output = inv.opts.json ? to_json(report) : to_text(report);
  outcome.exit_code = report.all_pass() ? 0 : 1;
  return outcome;
}

}  // namespace

Outcome execute(const Invocation& inv) {
  try {
    return run_dispatch(inv);
  } catch (const UsageError& problem) {
    Outcome outcome;
    outcome.exit_code = 2;
    outcome.errors =
        !problem.rendered.empty() ? problem.rendered : "error: " + problem.message + "\n";
    return outcome;
  } catch (const ParseError& problem) {
    Outcome outcome;
    outcome.exit_code = 2;
    outcome.errors = problem.diagnostic.render(inv.file_path) + "\n";
    return outcome;
  } catch (const std::exception& problem) {
    Outcome outcome;
    outcome.exit_code = 2;
    outcome.errors = std::string("error: ") + problem.what() + "\n";
    return outcome;
  }
}

}  // namespace rinehart
