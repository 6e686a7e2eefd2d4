#pragma once

#include <cstddef>

#include "concord/laurent.hpp"
#include "concord/linalg.hpp"
#include "concord/seifert.hpp"

namespace concord {

// Necessary conditions for algebraic sliceness. Both true proves nothing;
// either false obstructs.
struct SliceObstructions {
  bool signature_zero = false;
  bool determinant_square = false;

  friend bool operator==(const SliceObstructions&, const SliceObstructions&) = default;
};

struct InvariantReport {
  LaurentPoly alexander;  // canonical form: exponents from 0, value +1 at t = 1
  Int determinant;        // |alexander(-1)|, always odd
  int signature = 0;      // of V + V^t, always even
  int arf = 0;
  std::size_t genus = 0;  // dimension / 2
  bool alexander_one = false;
  SliceObstructions slice_obstructions;
};

// Alexander polynomial det(V - t*V^t), returned in canonical form.
inline LaurentPoly alexander(const SeifertMatrix& v) {
  const IntMatrix& m = v.matrix();
  const std::size_t n = v.dimension();
  PolyMatrix p(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      p(i, j) = LaurentPoly::constant(m(i, j)) - LaurentPoly::monomial(m(j, i), 1);
  return normalize_alexander(poly_matrix_det(p));
}

inline Int knot_determinant(const SeifertMatrix& v) {
  const Rational at_minus_one = alexander(v).evaluate(-1);
  return abs(numerator(at_minus_one));
}

inline int signature(const SeifertMatrix& v) {
  return symmetric_signature(v.symmetric_part()).signature;
}

// Arf invariant via the classical congruence: 0 iff Delta(-1) = +-1 mod 8.
inline int arf(const SeifertMatrix& v) {
  const Int d = numerator(alexander(v).evaluate(-1));
  const Int r = ((d % 8) + 8) % 8;
  return (r == 1 || r == 7) ? 0 : 1;
}

inline std::size_t genus(const SeifertMatrix& v) { return v.dimension() / 2; }

inline bool is_alexander_one(const SeifertMatrix& v) { return alexander(v).is_one(); }

inline SliceObstructions slice_obstructions(const SeifertMatrix& v) {
  return SliceObstructions{signature(v) == 0, is_perfect_square(knot_determinant(v))};
}

inline InvariantReport invariant_report(const SeifertMatrix& v) {
  InvariantReport report;
  report.alexander = alexander(v);
  report.determinant = abs(numerator(report.alexander.evaluate(-1)));
  report.signature = signature(v);
  const Int r = ((numerator(report.alexander.evaluate(-1)) % 8) + 8) % 8;
  report.arf = (r == 1 || r == 7) ? 0 : 1;
  report.genus = genus(v);
  report.alexander_one = report.alexander.is_one();
  report.slice_obstructions =
      SliceObstructions{report.signature == 0, is_perfect_square(report.determinant)};
  return report;
}

}  // namespace concord
