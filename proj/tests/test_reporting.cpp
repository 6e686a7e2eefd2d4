#include <catch2/catch_amalgamated.hpp>

#include "concord/catalog.hpp"
#include "concord/reporting.hpp"

using concord::CliReport;
using concord::ReportFormat;

TEST_CASE("invariants report renders both formats with identical values") {
  const concord::SeifertMatrix v1{concord::catalog::v1()};
  const CliReport report = concord::make_invariants_report("v1.mat", concord::invariant_report(v1));

  const std::string text = report.render(ReportFormat::text);
  const std::string json_text = report.render(ReportFormat::json);
  CHECK(text == report.render(ReportFormat::text));  // deterministic
  CHECK(json_text == report.render(ReportFormat::json));

  const auto doc = nlohmann::json::parse(json_text);
  CHECK(doc["inputs"]["file"] == "v1.mat");
  CHECK(doc["result"]["determinant"] == "1377");  // big integers render as strings
  const auto terms = doc["result"]["alexander"]["terms"];
  REQUIRE(terms.size() == 7);
  CHECK(terms[0][0] == 0);
  CHECK(terms[0][1] == "-16");
  CHECK(terms[6][0] == 6);
  CHECK(terms[6][1] == "-16");
  CHECK(text.find("determinant: 1377") != std::string::npos);
  CHECK(text.find(doc["result"]["alexander"]["display"].get<std::string>()) != std::string::npos);
}

TEST_CASE("band-check report carries the verdict in the status") {
  const CliReport yes = concord::make_band_check_report("a.mat", "b.mat", 1, true);
  CHECK(yes.pass);
  CHECK(yes.render(ReportFormat::text).find("status: pass") != std::string::npos);
  const CliReport no = concord::make_band_check_report("a.mat", "b.mat", 1, false);
  CHECK_FALSE(no.pass);
  const auto doc = nlohmann::json::parse(no.render(ReportFormat::json));
  CHECK(doc["status"] == "fail");
  CHECK(doc["result"]["band_move"] == false);
  CHECK(doc["inputs"]["index"] == 1);
}

TEST_CASE("verify report mirrors the outcome") {
  const CliReport report = concord::make_verify_report(concord::verify_construction());
  CHECK(report.pass);
  const auto doc = nlohmann::json::parse(report.render(ReportFormat::json));
  REQUIRE(doc["result"]["steps"].size() == 7);
  CHECK(doc["result"]["steps"][3]["name"] == "trivial-alexander");
  const std::string text = report.render(ReportFormat::text);
  for (int step = 1; step <= 7; ++step)
    CHECK(text.find("step " + std::to_string(step) + " PASS") != std::string::npos);
}
