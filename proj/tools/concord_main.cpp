// concord: exact knot invariants from Seifert matrices, band-move checks,
// and the built-in end-to-end verification.
//
// Exit status: 0 all verdicts pass, 1 a verdict failed, 2 usage/input error.

#include <cstddef>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "concord/concord.hpp"
#include "concord/reporting.hpp"

namespace {

concord::ReportFormat parse_format(const std::string& name) {
  return name == "json" ? concord::ReportFormat::json : concord::ReportFormat::text;
}

int run_invariants(const std::string& path, const std::string& format) {
  const concord::SeifertMatrix v{concord::read_matrix_file(path)};
  const concord::CliReport report =
      concord::make_invariants_report(path, concord::invariant_report(v));
  std::cout << report.render(parse_format(format));
  return 0;
}

int run_double(const std::string& framing) {
  std::cout << concord::write_matrix(
      concord::double_seifert(concord::parse_int_token(framing)).matrix());
  return 0;
}

int run_sum(const std::vector<std::string>& paths) {
  concord::SeifertMatrix total;
  for (const auto& path : paths)
    total = direct_sum(total, concord::SeifertMatrix{concord::read_matrix_file(path)});
  std::cout << concord::write_matrix(total.matrix());
  return 0;
}

int run_band_check(const std::string& path_a, const std::string& path_b, std::size_t index,
                   const std::string& format) {
  const concord::SeifertMatrix before{concord::read_matrix_file(path_a)};
  const concord::SeifertMatrix after{concord::read_matrix_file(path_b)};
  const bool verdict = concord::is_band_move(before, after, index);
  const concord::CliReport report =
      concord::make_band_check_report(path_a, path_b, index, verdict);
  std::cout << report.render(parse_format(format));
  return verdict ? 0 : 1;
}

int run_verify(const std::string& format) {
  const concord::VerifyOutcome outcome = concord::verify_construction();
  const concord::CliReport report = concord::make_verify_report(outcome);
  std::cout << report.render(parse_format(format));
  return outcome.all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact knot invariants from Seifert matrices"};
  app.require_subcommand(1);

  std::string path, path_a, path_b, framing = "0", format = "text";
  std::vector<std::string> paths;
  std::size_t band_index = 1;

  CLI::App* invariants = app.add_subcommand("invariants", "Invariant report for a matrix file");
  invariants->add_option("file", path, "matrix file")->required();
  invariants->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* dbl = app.add_subcommand("double", "Seifert matrix of a twisted double");
  dbl->add_option("--framing", framing, "framing of the second band")->required();

  CLI::App* sum = app.add_subcommand("sum", "Block sum of Seifert matrices");
  sum->add_option("file", paths, "matrix files")->required()->expected(-1);

  CLI::App* band = app.add_subcommand("band-check", "Decide whether one band move relates A to B");
  band->add_option("fileA", path_a, "matrix before")->required();
  band->add_option("fileB", path_b, "matrix after")->required();
  band->add_option("--index", band_index, "1-based band index")->required();
  band->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  CLI::App* verify = app.add_subcommand("verify-paper", "Run the built-in construction end to end");
  verify->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // help/version exit 0, every real parse problem is a usage error
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (invariants->parsed()) return run_invariants(path, format);
    if (dbl->parsed()) return run_double(framing);
    if (sum->parsed()) return run_sum(paths);
    if (band->parsed()) return run_band_check(path_a, path_b, band_index, format);
    if (verify->parsed()) return run_verify(format);
  } catch (const concord::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
