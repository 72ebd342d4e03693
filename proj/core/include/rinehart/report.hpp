#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rinehart {

/// One named verdict inside a report. Facts are ordered key → value pairs;
/// a value with several lines renders as a JSON array, a single line as a
/// plain string.
struct ReportCheck {
  std::string name;
  std::string verdict;  ///< "pass", "fail", or "infeasible"
  std::vector<std::pair<std::string, std::vector<std::string>>> facts;

  void fact(std::string key, std::string value) {
    facts.emplace_back(std::move(key), std::vector<std::string>{std::move(value)});
  }
  void fact_list(std::string key, std::vector<std::string> values) {
    facts.emplace_back(std::move(key), std::move(values));
  }
};

/// A full tool invocation result. Serialization is deterministic: fixed key
/// order, two-space indentation, sorted nothing — everything appears in
/// insertion order, so equal inputs give byte-equal reports.
struct Report {
  std::string command;
  std::string input_kind;  ///< "file" or "demo" or "args"
  std::string input_name;  ///< path or preset description
  std::string input_digest;  ///< "fnv1a64:<16 hex>" for file inputs, else empty
  std::uint64_t seed = 0;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<ReportCheck> checks;
  std::optional<double> timing_ms;

  void param(std::string key, std::string value) {
    params.emplace_back(std::move(key), std::move(value));
  }
  bool all_pass() const {
    for (const auto& check : checks) {
      if (check.verdict != "pass") return false;
    }
    return true;
  }
};

/// 64-bit FNV-1a over the raw bytes, rendered as 16 lowercase hex digits.
std::string fnv1a64_hex(std::string_view bytes);

std::string to_json(const Report& report);
std::string to_text(const Report& report);

}  // namespace rinehart
