#include <doctest.h>

#include "rinehart/report.hpp"

using namespace rinehart;

namespace {
Report sample_report() {
  Report report;
  report.command = "check";
  report.input_kind = "file";
  report.input_name = "x.lra";
  report.input_digest = "fnv1a64:cbf29ce484222325";
  report.seed = 42;
  ReportCheck check{"jacobi", "pass", {}};
  check.fact("witness", "none");
  report.checks.push_back(check);
  return report;
}
}  // namespace

TEST_CASE("the content digest matches published 64-bit FNV-1a vectors") {
  CHECK(fnv1a64_hex("") == "cbf29ce484222325");
  CHECK(fnv1a64_hex("a") == "af63dc4c8601ec8c");
  CHECK(fnv1a64_hex("foobar") == "85944171f73967e8");
}

TEST_CASE("reports aggregate verdicts into a single flag") {
  Report report = sample_report();
  CHECK(report.all_pass());
  report.checks.push_back(ReportCheck{"gram", "infeasible", {}});
  CHECK_FALSE(report.all_pass());
  report.checks[1].verdict = "fail";
  CHECK_FALSE(report.all_pass());
}

TEST_CASE("JSON output is deterministic, ordered, and newline-terminated") {
  Report report = sample_report();
  std::string a = to_json(report);
  std::string b = to_json(report);
  CHECK(a == b);
  CHECK(a.back() == '\n');
  // Keys appear in insertion order, not alphabetically.
  CHECK(a.find("\"tool\"") < a.find("\"command\""));
  CHECK(a.find("\"command\"") < a.find("\"input\""));
  CHECK(a.find("\"seed\"") < a.find("\"checks\""));
  CHECK(a.find("\"checks\"") < a.find("\"ok\""));
  CHECK(a.find("\"digest\": \"fnv1a64:cbf29ce484222325\"") != std::string::npos);
  CHECK(a.find("\"ok\": true") != std::string::npos);
  // No timing key unless requested.
  CHECK(a.find("timing") == std::string::npos);
}

TEST_CASE("timing appears only when set") {
  Report report = sample_report();
  report.timing_ms = 12.5;
  std::string with = to_json(report);
  CHECK(with.find("\"timing_ms\"") != std::string::npos);
}

TEST_CASE("the text rendering shows verdict lines and an overall result") {
  Report report = sample_report();
  std::string text = to_text(report);
  CHECK(text.find("[pass] jacobi") != std::string::npos);
  CHECK(text.find("witness: none") != std::string::npos);
  CHECK(text.find("result: ok") != std::string::npos);
  report.checks[0].verdict = "fail";
  CHECK(to_text(report).find("result: not ok") != std::string::npos);
}

TEST_CASE("multi-line facts render as JSON arrays") {
  Report report = sample_report();
  ReportCheck check{"table", "pass", {}};
  check.fact_list("rows", {"one", "two"});
  report.checks.push_back(check);
  std::string json = to_json(report);
  CHECK(json.find("\"one\"") != std::string::npos);
  CHECK(json.find("\"two\"") != std::string::npos);
}
