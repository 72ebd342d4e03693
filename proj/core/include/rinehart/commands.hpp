#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rinehart/report.hpp"

namespace rinehart {

struct CommandOptions {
  std::uint64_t seed = 0;
  bool json = true;    ///< false renders the text form
  bool timing = false; ///< include timing_ms in the report
  std::string target;  ///< declaration name; may stay empty for single-target files
  int s = 1;
  int l = 1;
  std::string point;   ///< comma-separated rational coordinates
  std::string matrix;  ///< semicolon-separated rational rows
  std::string preset;  ///< homogeneous demo preset name
  int degree_bound = 4;
  std::vector<std::string> exprs;       ///< bracket operands
  std::vector<std::string> prime_part;  ///< generator names declared vertical
};

struct Invocation {
  std::string command;    ///< check, bracket, reconstruct, build-extension,
                          ///< curvature, reconstruct-extension, run, demo,
                          ///< hilbert, momentum
  std::string demo_kind;  ///< dual-pair, so3-r3, or homogeneous
  std::string file_path;  ///< display name of the input file
  std::string file_text;  ///< raw file contents (caller reads the file)
  CommandOptions opts;
};

struct Outcome {
  int exit_code = 0;    ///< 0 all pass; 1 a verdict is not pass; 2 input error
  std::string output;   ///< rendered report for stdout
  std::string errors;   ///< diagnostics for stderr
};

/// Runs one tool invocation and renders its report. Never throws: input
/// problems come back as exit code 2 with diagnostics in `errors`.
Outcome execute(const Invocation& inv);

}  // namespace rinehart
