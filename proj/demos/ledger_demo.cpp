// Walk the concordance ledger end to end: sum three twisted doubles, apply
// one band move, and certify the tau vs s/2 gap.

#include <iostream>

#include "concord/concord.hpp"

int main() {
  using namespace concord;

  const KnotRecord k =
      connect_sum(connect_sum(known_double(doubles::t23_framing2),
                              known_double(doubles::t23_framing2)),
                  known_double(doubles::t25_framing4))
          .renamed("K");
  std::cout << "K:  tau = " << k.tau.to_string() << ", s = " << k.s.to_string() << "\n";

  const KnotRecord j = band_move_update(k, SeifertMatrix{catalog::v2()}, 1).renamed("J");
  std::cout << "J:  tau = " << j.tau.to_string() << ", s = " << j.s.to_string() << "\n";
  std::cout << "alexander(J) = " << alexander(*j.matrix).to_string() << "\n";
  std::cout << "topologically slice: " << to_string(topologically_slice(j)) << "\n";
  std::cout << "tau != s/2: " << to_string(tau_neq_s_half(j)) << "\n";
  std::cout << "rank-3 summand: "
            << to_string(summand_rank3_certificate(known_double(doubles::t23_framing0),
                                                   known_double(doubles::t25_framing0), j))
            << "\n";
  return 0;
}
