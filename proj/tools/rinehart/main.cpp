#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rinehart/commands.hpp"
#include "rinehart/version.hpp"

namespace {

/// Reads a whole file; returns false when it cannot be opened.
bool slurp(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  out = buffer.str();
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact calculator for Lie-Rinehart presentations and their Poisson shadows"};
  app.set_version_flag("--version", std::string(rinehart::kToolName) + " " +
                                        rinehart::kToolVersion);
  app.require_subcommand(1);

  rinehart::Invocation inv;
  std::string file_arg;
  std::string demo_kind;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--seed", inv.opts.seed, "seed for sampled checks")->capture_default_str();
    cmd->add_flag("--timing", inv.opts.timing, "include wall-clock timing in the report");
    auto* json = cmd->add_flag_callback(
        "--json", [&] { inv.opts.json = true; }, "emit the report as JSON (default)");
    cmd->add_flag_callback(
           "--text", [&] { inv.opts.json = false; }, "emit the report as readable text")
        ->excludes(json);
  };
  auto add_file = [&](CLI::App* cmd) {
    cmd->add_option("file", file_arg, "input file")->required();
    cmd->add_option("--target", inv.opts.target,
                    "declaration to act on (defaults to the only one)");
  };

  CLI::App* check = app.add_subcommand("check", "verify every law a declaration promises");
  add_file(check);
  add_common(check);

  CLI::App* bracket = app.add_subcommand("bracket", "evaluate one Poisson bracket");
  add_file(bracket);
  bracket->add_option("exprs", inv.opts.exprs, "two polynomial expressions")
      ->expected(2)
      ->required();
  add_common(bracket);

  CLI::App* reconstruct =
      app.add_subcommand("reconstruct", "recover a presentation from its bracket");
  add_file(reconstruct);
  add_common(reconstruct);

  CLI::App* build_ext =
      app.add_subcommand("build-extension", "assemble the total algebra of an extension");
  add_file(build_ext);
  add_common(build_ext);

  CLI::App* curvature =
      app.add_subcommand("curvature", "compute the curvature of an extension's section");
  add_file(curvature);
  add_common(curvature);

  CLI::App* rec_ext = app.add_subcommand(
      "reconstruct-extension", "split an algebra back into vertical and quotient parts");
  add_file(rec_ext);
  rec_ext->add_option("--prime", inv.opts.prime_part,
                      "generator names forming the vertical part")
      ->delimiter(',');
  add_common(rec_ext);

  CLI::App* run = app.add_subcommand("run", "execute the command statements in a file");
  run->add_option("file", file_arg, "input file")->required();
  add_common(run);

  CLI::App* demo = app.add_subcommand("demo", "run a built-in worked example");
  demo->add_option("kind", demo_kind, "dual-pair, so3-r3, or homogeneous")->required();
  demo->add_option("--s", inv.opts.s, "number of vector slots")->capture_default_str();
  demo->add_option("--l", inv.opts.l, "dimension of each slot")->capture_default_str();
  demo->add_option("--preset", inv.opts.preset,
                   "homogeneous preset: so3-so2, gxg-so3, or borel");
  demo->add_option("--degree-bound", inv.opts.degree_bound,
                   "largest polynomial degree to scan")
      ->capture_default_str();
  add_common(demo);

  CLI::App* hilbert =
      app.add_subcommand("hilbert", "factor a Gram matrix through the dot-product map");
  hilbert->add_option("--s", inv.opts.s, "number of vector slots")->capture_default_str();
  hilbert->add_option("--l", inv.opts.l, "dimension of each slot")->capture_default_str();
  hilbert->add_option("--point", inv.opts.point, "rational coordinates, comma separated");
  hilbert->add_option("--matrix", inv.opts.matrix,
                      "rational symmetric matrix, rows separated by ';'");
  add_common(hilbert);

  CLI::App* momentum =
      app.add_subcommand("momentum", "evaluate the quadratic momentum matrix at a point");
  momentum->add_option("--s", inv.opts.s, "number of vector slots")->capture_default_str();
  momentum->add_option("--l", inv.opts.l, "dimension of each slot")->capture_default_str();
  momentum->add_option("--point", inv.opts.point,
                       "rational coordinates for all q then all p entries");
  add_common(momentum);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  CLI::App* picked = app.get_subcommands().front();
  inv.command = picked->get_name();
  inv.demo_kind = demo_kind;

  if (!file_arg.empty()) {
    inv.file_path = file_arg;
    if (!slurp(file_arg, inv.file_text)) {
      std::cerr << "error: cannot read file '" << file_arg << "'\n";
      return 2;
    }
  }

  rinehart::Outcome outcome = rinehart::execute(inv);
  if (!outcome.output.empty()) std::cout << outcome.output;
  if (!outcome.errors.empty()) std::cerr << outcome.errors;
  return outcome.exit_code;
}
