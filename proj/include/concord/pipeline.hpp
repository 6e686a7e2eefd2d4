#pragma once

#include <exception>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "concord/catalog.hpp"
#include "concord/invariants.hpp"
#include "concord/ledger.hpp"
#include "concord/seifert.hpp"

namespace concord {

// The end-to-end argument behind `verify-paper`, replayed in exact
// arithmetic: build K as a sum of three twisted doubles, apply one band move
// to reach J, show J has trivial Alexander polynomial (hence is
// topologically slice), propagate the tau/s bounds, and certify that tau(J)
// differs from s(J)/2 and that (tau, s/2, delta) span a rank-3 summand.

struct VerifyStep {
  int number = 0;
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyOutcome {
  std::vector<VerifyStep> steps;  // stops after the first failing step
  bool all_passed = false;

  const VerifyStep* failed_step() const {
    if (steps.empty() || steps.back().passed) return nullptr;
    return &steps.back();
  }
};

struct VerifyOptions {
  AxiomStore axioms = AxiomStore::builtin();
  IntMatrix band_move_target = catalog::v2();
};

inline VerifyOutcome verify_construction(const VerifyOptions& options = {}) {
  VerifyOutcome outcome;
  bool halted = false;

  const auto step = [&](int number, std::string name, auto&& body) {
    if (halted) return;
    VerifyStep s;
    s.number = number;
    s.name = std::move(name);
    try {
      s.detail = body();
      s.passed = true;
    } catch (const std::exception& e) {
      s.detail = e.what();
      s.passed = false;
      halted = true;
    }
    outcome.steps.push_back(std::move(s));
  };

  const auto expect = [](bool condition, const std::string& message) {
    if (!condition) throw std::runtime_error("check failed: " + message);
    return message;
  };

  SeifertMatrix constructed;
  KnotRecord k{"K", std::nullopt, BoundedValue::exact(0), BoundedValue::exact(0, true), {}, {}};
  KnotRecord j = k;
  SeifertMatrix target;

  step(1, "block-sum-construction", [&] {
    constructed = direct_sum(direct_sum(double_seifert(2), double_seifert(2)), double_seifert(4));
    return expect(constructed.matrix() == catalog::v1(),
                  "double(2) + double(2) + double(4) reproduces the stored 6x6 matrix");
  });

  step(2, "ledger-connected-sum", [&] {
    const KnotRecord a = options.axioms.known_double(doubles::t23_framing2);
    const KnotRecord b = options.axioms.known_double(doubles::t23_framing2);
    const KnotRecord c = options.axioms.known_double(doubles::t25_framing4);
    k = connect_sum(connect_sum(a, b), c).renamed("K");
    expect(k.matrix && *k.matrix == constructed, "summed record carries the constructed matrix");
    return expect(k.tau == BoundedValue::exact(0) && k.s == BoundedValue::exact(6, true),
                  "tau(K) = " + k.tau.to_string() + ", s(K) = " + k.s.to_string());
  });

  step(3, "band-move-check", [&] {
    target = SeifertMatrix(options.band_move_target);
    return expect(is_band_move(*k.matrix, target, 1),
                  "target matrix differs from K's matrix by one move of band 1");
  });

  step(4, "trivial-alexander", [&] {
    j = band_move_update(k, target, 1).renamed("J");
    const LaurentPoly delta = alexander(target);
    expect(delta.is_one(), "alexander polynomial of the target is " + delta.to_string());
    return expect(topologically_slice(j) == SliceStatus::topologically_slice,
                  "alexander polynomial 1, so J is topologically slice");
  });

  step(5, "bound-propagation", [&] {
    return expect(j.tau == BoundedValue(-1, 1) && j.s == BoundedValue(4, 6, true),
                  "tau(J) = " + j.tau.to_string() + ", s(J) = " + j.s.to_string());
  });

  step(6, "tau-vs-s-gap", [&] {
    return expect(tau_neq_s_half(j) == Certificate::certified,
                  "2*tau(J) <= 2 < 4 <= s(J): the intervals certify tau(J) != s(J)/2");
  });

  step(7, "rank3-summand", [&] {
    const KnotRecord a = options.axioms.known_double(doubles::t23_framing0);
    const KnotRecord b = options.axioms.known_double(doubles::t25_framing0);
    return expect(summand_rank3_certificate(a, b, j) == Certificate::certified,
                  "(tau, s/2, delta) has rank 3 on (" + a.name + ", " + b.name + ", J)");
  });

  outcome.all_passed = !halted && outcome.steps.size() == 7;
  return outcome;
}

}  // namespace concord
