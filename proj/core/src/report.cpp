#include "rinehart/report.hpp"

#include <sstream>

#include "nlohmann/json.hpp"
#include "rinehart/version.hpp"

namespace rinehart {

std::string fnv1a64_hex(std::string_view bytes) {
  std::uint64_t hash = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 1099511628211ULL;
  }
  static const char digits[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[hash & 0xF];
    hash >>= 4;
  }
  return out;
}

std::string to_json(const Report& report) {
  nlohmann::ordered_json doc;
  doc["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
  doc["command"] = report.command;
  nlohmann::ordered_json input;
  input["kind"] = report.input_kind;
  input["name"] = report.input_name;
  if (!report.input_digest.empty()) {
    input["digest"] = report.input_digest;
  }
  doc["input"] = std::move(input);
  doc["seed"] = report.seed;
  if (!report.params.empty()) {
    nlohmann::ordered_json params;
    for (const auto& [key, value] : report.params) {
      params[key] = value;
    }
    doc["params"] = std::move(params);
  }
  doc["checks"] = nlohmann::ordered_json::array();
  for (const auto& check : report.checks) {
    nlohmann::ordered_json entry;
    entry["name"] = check.name;
    entry["verdict"] = check.verdict;
    if (!check.facts.empty()) {
      nlohmann::ordered_json facts;
      for (const auto& [key, lines] : check.facts) {
        if (lines.size() == 1) {
          facts[key] = lines.front();
        } else {
          facts[key] = lines;
        }
      }
      entry["facts"] = std::move(facts);
    }
    doc["checks"].push_back(std::move(entry));
  }
  doc["ok"] = report.all_pass();
  if (report.timing_ms) {
    doc["timing_ms"] = *report.timing_ms;
  }
  return doc.dump(2) + "\n";
}

std::string to_text(const Report& report) {
  std::ostringstream out;
  out << kToolName << " " << kToolVersion << " — " << report.command << " (seed " << report.seed
      << ")\n";
  out << "input: " << report.input_name;
  if (!report.input_digest.empty()) {
    out << " [" << report.input_digest << "]";
  }
  out << "\n";
  for (const auto& [key, value] : report.params) {
    out << "  " << key << " = " << value << "\n";
  }
  for (const auto& check : report.checks) {
    out << "[" << check.verdict << "] " << check.name << "\n";
    for (const auto& [key, lines] : check.facts) {
      if (lines.size() == 1) {
        out << "    " << key << ": " << lines.front() << "\n";
      } else {
        out << "    " << key << ":\n";
        for (const auto& line : lines) {
          out << "      " << line << "\n";
        }
      }
    }
  }
  out << "result: " << (report.all_pass() ? "ok" : "not ok") << "\n";
  if (report.timing_ms) {
    out << "timing_ms: " << *report.timing_ms << "\n";
  }
  return out.str();
}

}  // namespace rinehart
