// Acceptance sweep: ten independently-checkable contract points, one verdict
// line each. Exits nonzero when any of them fails. Everything here runs on
// exact arithmetic; the single numeric fallback is gated by an exact residual
// bound of 1/10^12.
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "rinehart/commands.hpp"
#include "rinehart/dual_pair.hpp"
#include "rinehart/extensions.hpp"
#include "rinehart/presets.hpp"
#include "rinehart/reductive.hpp"
#include "rinehart/report.hpp"
#include "rinehart/tautological.hpp"

using namespace rinehart;

namespace {

int failures = 0;

void verdict(int number, bool ok, const std::string& what,
             const std::string& detail = "") {
  std::printf("criterion %2d: %s — %s\n", number, ok ? "PASS" : "FAIL", what.c_str());
  if (!ok) {
    ++failures;
    if (!detail.empty()) std::printf("              %s\n", detail.c_str());
  }
}

ContextPtr ctx_of(LieRinehartPresentation pres) {
  return std::make_shared<const LieRinehartPresentation>(std::move(pres));
}

std::vector<LieRinehartPresentation> valid_presentations() {
  return {presets::vect_line(), presets::so3(),
          build_total(presets::heisenberg_extension())};
}

// --- criterion 1 -----------------------------------------------------------

void criterion_axioms() {
  std::string detail;
  bool ok = true;
  for (const auto& pres : valid_presentations()) {
    if (!check_axioms(pres).ok()) {
      ok = false;
      detail = "valid presentation '" + pres.name + "' failed";
    }
  }

  AxiomReport so3_bad = check_axioms(presets::so3_mutant());
  if (so3_bad.jacobi_ok || !so3_bad.jacobi_witness ||
      so3_bad.jacobi_witness->indices != std::vector<std::size_t>{1, 2, 3} ||
      so3_bad.jacobi_witness->defect != Poly::variable(fiber_var("e2"))) {
    ok = false;
    detail = "rotation mutant not caught at (1,2,3) with defect e2";
  }

  AxiomReport anchor_bad = check_axioms(presets::anchor_mutant());
  if (anchor_bad.anchor_morphism_ok || !anchor_bad.anchor_witness ||
      anchor_bad.anchor_witness->indices.size() < 2 ||
      anchor_bad.anchor_witness->indices[0] != 1 ||
      anchor_bad.anchor_witness->indices[1] != 2) {
    ok = false;
    detail = "anchor mutant not caught on pair (1,2)";
  }

  AxiomReport curv_bad =
      check_axioms(build_total(presets::nonclosed_curvature_mutant()));
  if (curv_bad.jacobi_ok || !curv_bad.jacobi_witness ||
      curv_bad.jacobi_witness->indices != std::vector<std::size_t>{2, 3, 4} ||
      curv_bad.jacobi_witness->defect != Poly::variable(fiber_var("c"))) {
    ok = false;
    detail = "non-closed twist not caught at (2,3,4) with defect c";
  }

  verdict(1, ok, "axiom checks: 3 valid presentations pass, 3 mutants fail with witnesses",
          detail);
}

// --- criterion 2 -----------------------------------------------------------

void criterion_bracket_laws() {
  bool ok = true;
  std::string detail;
  for (auto& pres : valid_presentations()) {
    ContextPtr ctx = ctx_of(std::move(pres));
    SampleRng rng(2024);
    for (const SampledLawReport& law : check_bracket_laws(ctx, rng, 64)) {
      if (!law.ok || law.samples != 64) {
        ok = false;
        detail = ctx->name + ": " + law.law + " failed, defect " + law.defect.to_string();
      }
    }
  }
  verdict(2, ok, "bracket laws (antisymmetry, product rule, Jacobi) on 64 seeded samples each",
          detail);
}

// --- criterion 3 -----------------------------------------------------------

void criterion_potential() {
  bool ok = true;
  std::string detail;
  for (auto& pres : valid_presentations()) {
    ContextPtr ctx = ctx_of(std::move(pres));
    PotentialReport report = check_potential(ctx);
    if (!report.ok) {
      ok = false;
      detail = ctx->name + " failed the exterior-derivative identity";
    }
  }
  verdict(3, ok, "potential identity dtheta = pi on all generator pairs", detail);
}

// --- criterion 4 -----------------------------------------------------------

void criterion_reconstruction() {
  bool ok = true;
  std::string detail;
  for (auto& pres : valid_presentations()) {
    ContextPtr ctx = ctx_of(pres);
    if (!(reconstruct(ctx) == pres)) {
      ok = false;
      detail = pres.name + " did not roundtrip";
    }
  }
  ExtensionData heis = presets::heisenberg_extension();
  LieRinehartPresentation total = build_total(heis);
  ConnectionMap conn = canonical_inclusion(
      total, canonical_split(heis.l_prime.fiber_dim(), total.fiber_dim()));
  if (!(curvature_of(total, conn) == heis.omega)) {
    ok = false;
    detail = "curvature extraction missed the declared twist";
  }
  ExtensionData back = reconstruct_extension(total, conn);
  if (!(back.l_prime == heis.l_prime && back.l_double_prime == heis.l_double_prime &&
        back.nabla == heis.nabla && back.omega == heis.omega &&
        build_total(back) == total)) {
    ok = false;
    detail = "extension reconstruction did not roundtrip";
  }
  verdict(4, ok, "reconstruction roundtrips (presentations, extension, curvature)", detail);
}

// --- criterion 5 -----------------------------------------------------------

void criterion_extension_identities() {
  bool ok = true;
  std::string detail;
  for (auto ext : {presets::heisenberg_extension(), presets::direct_product_extension(),
                   presets::atiyah_shadow(), presets::closed_curvature_rank_two(),
                   presets::nonclosed_curvature_mutant()}) {
    SampleRng rng(5);
    ExtensionIdentitiesReport report = check_extension_identities(ext, rng, 16);
    for (const IdentityCheck& check : report.checks) {
      if (!check.ok) {
        ok = false;
        detail = ext.name + ": " + check.name + " (" + check.witness + ")";
      }
    }
  }
  verdict(5, ok, "split-extension structure identities on all 5 shipped data sets", detail);
}

// --- criterion 6 -----------------------------------------------------------

void criterion_sp_closure() {
  bool ok = true;
  std::string detail;
  const std::size_t expected_dim[] = {0, 3, 10, 21};
  for (int l = 1; l <= 3; ++l) {
    for (int s = 1; s <= 3; ++s) {
      DualPairScene scene = DualPairScene::make(s, l);
      try {
        ClosureTable table = closure_table(scene);
        if (table.basis.size() != expected_dim[l]) {
          ok = false;
          detail = "unexpected generator count at s=" + std::to_string(s) +
                   " l=" + std::to_string(l);
        }
      } catch (const std::exception& e) {
        ok = false;
        detail = std::string("closure failed: ") + e.what();
      }
      SpIsomorphismReport iso = verify_sp_isomorphism(scene);
      if (!iso.ok || iso.dimension != expected_dim[l]) {
        ok = false;
        detail = "isomorphism check failed at s=" + std::to_string(s) +
                 " l=" + std::to_string(l) + ": " + iso.detail;
      }
      if (l <= 2) {
        MomentumPropertyReport momentum = momentum_property_check(scene);
        if (!momentum.ok) {
          ok = false;
          detail = "momentum property failed at s=" + std::to_string(s) +
                   " l=" + std::to_string(l) + ": " + momentum.witness;
        }
      }
    }
  }
  verdict(6, ok,
          "quadratic generators close onto a symplectic algebra of dimension 3/10/21 "
          "(momentum sweep for l <= 2)",
          detail);
}

// --- criterion 7 -----------------------------------------------------------

void criterion_hilbert() {
  bool ok = true;
  std::string detail;
  SampleRng rng(77);

  // 200 random rational points per size pair: the squared-length matrix must
  // certify PSD and respect the rank bound.
  for (int s = 1; s <= 3 && ok; ++s) {
    for (int l = 1; l <= 3 && ok; ++l) {
      DualPairScene scene = DualPairScene::make(s, l);
      for (int trial = 0; trial < 200; ++trial) {
        std::vector<Rational> point;
        for (int i = 0; i < s * l; ++i) point.push_back(rng.small_rational(6, 4));
        RatMatrix gram = hilbert_map(scene, point);
        Ldlt f = ldlt_decompose(gram);
        std::size_t bound = static_cast<std::size_t>(std::min(s, l));
        if (!f.psd || gram.rank() > bound) {
          ok = false;
          detail = "a point's matrix was not PSD of admissible rank at s=" +
                   std::to_string(s) + " l=" + std::to_string(l);
          break;
        }
      }
    }
  }

  // 50 seeded feasible matrices: preimage must come back exact, or numeric
  // with the exact residual at most 1/10^12.
  const Rational tolerance = make_rational(1, 1000000000000L);
  for (int trial = 0; trial < 50 && ok; ++trial) {
    int s = 1 + static_cast<int>(rng.below(3));
    int l = 1 + static_cast<int>(rng.below(3));
    int rank_cap = std::min(s, l);
    RatMatrix gram(l, l);
    std::vector<std::vector<Rational>> vecs(l, std::vector<Rational>(s, Rational(0)));
    for (int j = 0; j < l; ++j) {
      for (int i = 0; i < rank_cap; ++i) vecs[j][i] = rng.small_rational(5, 3);
    }
    for (int j = 0; j < l; ++j) {
      for (int k = 0; k < l; ++k) {
        Rational dot = 0;
        for (int i = 0; i < s; ++i) dot += vecs[j][i] * vecs[k][i];
        gram.at(j, k) = dot;
      }
    }
    HilbertPreimage pre = hilbert_preimage(gram, s);
    if (pre.status == HilbertPreimage::Status::infeasible) {
      ok = false;
      detail = "a feasible matrix was reported infeasible (trial " +
               std::to_string(trial) + ")";
    } else if (pre.status == HilbertPreimage::Status::numeric &&
               (!pre.residual_ok || pre.residual > tolerance)) {
      ok = false;
      detail = "numeric fallback exceeded the residual bound (trial " +
               std::to_string(trial) + ")";
    }
  }

  // 20 infeasible matrices: 10 indefinite by congruence with a mixed-sign
  // diagonal, 10 whose rank exceeds the slot count.
  for (int trial = 0; trial < 10 && ok; ++trial) {
    std::size_t n = 2 + rng.below(2);
    RatMatrix r(n, n);
    do {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) r.at(i, j) = rng.small_rational(4, 2);
      }
    } while (r.rank() != n);
    RatMatrix d(n, n);
    for (std::size_t i = 0; i < n; ++i) d.at(i, i) = make_rational(1);
    d.at(0, 0) = make_rational(-1);  // mixed signature survives congruence
    RatMatrix m = r.transposed() * d * r;
    HilbertPreimage pre = hilbert_preimage(m, static_cast<int>(n));
    if (pre.status != HilbertPreimage::Status::infeasible) {
      ok = false;
      detail = "an indefinite matrix slipped through (trial " + std::to_string(trial) + ")";
    } else if (pre.infeasible_reason == "indefinite" && !(pre.witness_value < 0)) {
      ok = false;
      detail = "indefinite verdict lacked a negative witness value";
    }
  }
  for (int trial = 0; trial < 10 && ok; ++trial) {
    std::size_t n = 2 + rng.below(2);  // matrix size 2 or 3
    int s = static_cast<int>(n) - 1;   // one slot short
    RatMatrix r(n, n);
    do {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) r.at(i, j) = rng.small_rational(4, 2);
      }
    } while (r.rank() != n);
    RatMatrix m = r.transposed() * r;  // PSD of full rank n > s
    HilbertPreimage pre = hilbert_preimage(m, s);
    if (pre.status != HilbertPreimage::Status::infeasible ||
        pre.infeasible_reason != "rank_exceeds_s") {
      ok = false;
      detail = "a rank-excess matrix was not rejected (trial " + std::to_string(trial) + ")";
    }
  }

  verdict(7, ok,
          "squared-length matrices: 1800 PSD rank-bounded points, 50 feasible preimages "
          "(residual <= 1/10^12), 20 infeasible rejections",
          detail);
}

// --- criterion 8 -----------------------------------------------------------

void criterion_deficiency() {
  bool ok = true;
  std::string detail;
  for (int l : {1, 2}) {
    DualPairScene scene = DualPairScene::make(2, l);
    DeficiencyReport report = sal_deficiency_report(scene);
    std::size_t expected_pp = static_cast<std::size_t>(l * (l + 1) / 2);
    if (!report.ok || report.certified_missing.size() != expected_pp ||
        !report.kinetic_missing || !report.qp_members_ok) {
      ok = false;
      detail = "l=" + std::to_string(l) + ": " + report.detail;
    }
  }
  verdict(8, ok,
          "momentum-side generators certified outside the position-only span (l = 1, 2)",
          detail);
}

// --- criterion 9 -----------------------------------------------------------

void criterion_homogeneous() {
  bool ok = true;
  std::string detail;
  for (auto pair : {presets::so3_so2(), presets::double_so3()}) {
    if (!check_reductive(pair).ok()) {
      ok = false;
      detail = pair.name + " failed the stability laws";
    }
  }
  GapReport gap = homogeneous_invariant_gap(presets::so3_so2(), 4);
  if (gap.rows.size() < 3 || gap.rows[2].invariant_dim != 1 ||
      gap.rows[2].restricted_dim != 0 || !gap.first_gap_degree ||
      *gap.first_gap_degree != 2) {
    ok = false;
    detail = "expected a 1-vs-0 gap at degree 2 for the sphere pair";
  }
  verdict(9, ok, "reductive pairs validate; sphere pair shows the 1-vs-0 gap at degree 2",
          detail);
}

// --- criterion 10 ----------------------------------------------------------

const char kGoodInput[] = R"(# Angular-momentum generators with a trivial anchor.
algebra so3 {
  basis e1, e2, e3;
  bracket [e1, e2] = e3;
  bracket [e2, e3] = e1;
  bracket [e3, e1] = e2;
}
)";

const char kBadInput[] = R"(algebra broken {
  basis e1;
  bracket [e1, e9] = e1;
}
)";

void criterion_cli_contract() {
  bool ok = true;
  std::string detail;

  Invocation good;
  good.command = "check";
  good.file_path = "input.lra";
  good.file_text = kGoodInput;
  Outcome first = execute(good);
  Outcome second = execute(good);
  if (first.exit_code != 0 || first.output.empty()) {
    ok = false;
    detail = "check on a valid input did not succeed";
  } else if (first.output != second.output) {
    ok = false;
    detail = "two identical invocations produced different bytes";
  }
  const std::string expected_digest =
      "\"digest\": \"fnv1a64:" + fnv1a64_hex(kGoodInput) + "\"";
  if (first.output.find(expected_digest) == std::string::npos) {
    ok = false;
    detail = "content digest missing or wrong";
  }

  Invocation bad;
  bad.command = "check";
  bad.file_path = "input.lra";
  bad.file_text = kBadInput;
  Outcome broken = execute(bad);
  if (broken.exit_code != 2 ||
      broken.errors != "input.lra:3:16: error: unknown generator 'e9'\n") {
    ok = false;
    detail = "diagnostic position or exit code drifted: got exit " +
             std::to_string(broken.exit_code) + ", message: " + broken.errors;
  }

  verdict(10, ok, "fixed inputs give byte-identical reports; diagnostics keep their positions",
          detail);
}

}  // namespace

int main() {
  criterion_axioms();
  criterion_bracket_laws();
  criterion_potential();
  criterion_reconstruction();
  criterion_extension_identities();
  criterion_sp_closure();
  criterion_hilbert();
  criterion_deficiency();
  criterion_homogeneous();
  criterion_cli_contract();
  if (failures == 0) {
    std::printf("acceptance: all 10 criteria hold\n");
    return 0;
  }
  std::printf("acceptance: %d criteria failed\n", failures);
  return 1;
}
