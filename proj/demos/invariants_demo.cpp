// Compute the classical invariants of a Seifert matrix given inline.

#include <iostream>

#include "concord/concord.hpp"

int main() {
  using namespace concord;

  const SeifertMatrix figure_eight{IntMatrix::from_rows({{1, 1}, {0, -1}})};
  const InvariantReport report = invariant_report(figure_eight);

  std::cout << "matrix:\n" << write_matrix(figure_eight.matrix());
  std::cout << "alexander:   " << report.alexander.to_string() << "\n";
  std::cout << "determinant: " << report.determinant << "\n";
  std::cout << "signature:   " << report.signature << "\n";
  std::cout << "arf:         " << report.arf << "\n";
  std::cout << "genus:       " << report.genus << "\n";
  return 0;
}
