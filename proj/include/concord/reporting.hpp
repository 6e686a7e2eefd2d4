#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "concord/invariants.hpp"
#include "concord/ledger.hpp"
#include "concord/pipeline.hpp"

namespace concord {

// Deterministic report rendering for the CLI. The same report renders to
// text or JSON; both carry the same values. Big integers appear as decimal
// strings in JSON so no consumer ever rounds them.
using json = nlohmann::ordered_json;

enum class ReportFormat { text, json };

inline json poly_to_json(const LaurentPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({e, c.str()});
  return json{{"terms", terms}, {"display", p.to_string()}};
}

inline json bounded_to_json(const BoundedValue& b) {
  return json{{"lo", b.lo().str()}, {"hi", b.hi().str()}, {"even_only", b.even_only()}};
}

inline json invariant_report_to_json(const InvariantReport& r) {
  return json{{"alexander", poly_to_json(r.alexander)},
              {"determinant", r.determinant.str()},
              {"signature", r.signature},
              {"arf", r.arf},
              {"genus", r.genus},
              {"alexander_one", r.alexander_one},
              {"slice_obstructions",
               {{"signature_zero", r.slice_obstructions.signature_zero},
                {"determinant_square", r.slice_obstructions.determinant_square}}}};
}

struct CliReport {
  std::string command;
  json inputs;
  json result;
  bool pass = true;
  std::vector<std::string> text_lines;  // body of the text rendering

  std::string render(ReportFormat format) const {
    if (format == ReportFormat::json) {
      const json document{{"command", command},
                          {"inputs", inputs},
                          {"result", result},
                          {"status", pass ? "pass" : "fail"}};
      return document.dump(2) + "\n";
    }
    std::string out = "command: " + command + "\n";
    for (const auto& [key, value] : inputs.items())
      out += "input " + key + ": " + (value.is_string() ? value.get<std::string>() : value.dump()) +
             "\n";
    for (const auto& line : text_lines) out += line + "\n";
    out += std::string("status: ") + (pass ? "pass" : "fail") + "\n";
    return out;
  }
};

inline CliReport make_invariants_report(const std::string& path, const InvariantReport& r) {
  CliReport report;
  report.command = "invariants";
  report.inputs = json{{"file", path}};
  report.result = invariant_report_to_json(r);
  report.text_lines = {
      "alexander: " + r.alexander.to_string(),
      "determinant: " + r.determinant.str(),
      "signature: " + std::to_string(r.signature),
      "arf: " + std::to_string(r.arf),
      "genus: " + std::to_string(r.genus),
      std::string("alexander_one: ") + (r.alexander_one ? "true" : "false"),
      std::string("slice_obstruction signature_zero: ") +
          (r.slice_obstructions.signature_zero ? "true" : "false"),
      std::string("slice_obstruction determinant_square: ") +
          (r.slice_obstructions.determinant_square ? "true" : "false"),
  };
  return report;
}

inline CliReport make_band_check_report(const std::string& path_a, const std::string& path_b,
                                        std::size_t index, bool verdict) {
  CliReport report;
  report.command = "band-check";
  report.inputs = json{{"before", path_a}, {"after", path_b}, {"index", index}};
  report.result = json{{"band_move", verdict}};
  report.pass = verdict;
  report.text_lines = {std::string("band_move: ") + (verdict ? "true" : "false")};
  return report;
}

inline CliReport make_verify_report(const VerifyOutcome& outcome) {
  CliReport report;
  report.command = "verify-paper";
  report.inputs = json::object();
  json steps = json::array();
  for (const auto& s : outcome.steps) {
    steps.push_back(json{{"step", s.number},
                         {"name", s.name},
                         {"status", s.passed ? "pass" : "fail"},
                         {"detail", s.detail}});
    report.text_lines.push_back("step " + std::to_string(s.number) + " " +
                                (s.passed ? "PASS" : "FAIL") + " " + s.name + ": " + s.detail);
  }
  report.result = json{{"steps", steps}};
  report.pass = outcome.all_passed;
  return report;
}

}  // namespace concord
