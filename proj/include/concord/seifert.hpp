#pragma once

#include <cstddef>
#include <utility>

#include "concord/linalg.hpp"
#include "concord/matrix.hpp"

namespace concord {

// A Seifert matrix: square integer matrix V of even dimension 2g with
// det(V - V^t) = 1. The skew part V - V^t is the intersection form of the
// genus-g spanning surface, so it is what every surface-preserving operation
// must leave untouched. Construction validates; instances are immutable.
class SeifertMatrix {
 public:
  SeifertMatrix() = default;  // the empty matrix (unknot)

  explicit SeifertMatrix(IntMatrix v) : v_(std::move(v)) {
    if (v_.dimension() % 2 != 0)
      fail(errc::odd_dimension, "Seifert matrix dimension must be even");
    if (integer_determinant(v_ - v_.transpose()) != 1)
      fail(errc::not_unimodular, "det(V - V^t) must equal 1");
  }

  const IntMatrix& matrix() const { return v_; }
  std::size_t dimension() const { return v_.dimension(); }

  IntMatrix skew_part() const { return v_ - v_.transpose(); }
  IntMatrix symmetric_part() const { return v_ + v_.transpose(); }

  friend bool operator==(const SeifertMatrix& a, const SeifertMatrix& b) { return a.v_ == b.v_; }
  friend bool operator!=(const SeifertMatrix& a, const SeifertMatrix& b) { return !(a == b); }

 private:
  IntMatrix v_;
};

// Seifert matrix of a positive twisted double: two bands on a disk, one with
// framing -1 and one with the given framing.
inline SeifertMatrix double_seifert(const Int& framing) {
  IntMatrix v(2);
  v(0, 0) = -1;
  v(0, 1) = 1;
  v(1, 0) = 0;
  v(1, 1) = framing;
  return SeifertMatrix(std::move(v));
}

// Block sum; the Seifert matrix of a connected sum.
inline SeifertMatrix direct_sum(const SeifertMatrix& a, const SeifertMatrix& b) {
  return SeifertMatrix(IntMatrix::block_diag(a.matrix(), b.matrix()));
}

// A claimed band move: cutting band `band_index` (1-based) and reattaching it
// with new twisting and linking.
struct BandMoveClaim {
  SeifertMatrix before;
  SeifertMatrix after;
  std::size_t band_index = 1;
};

// True iff the two matrices agree everywhere outside row and column
// band_index and share the same skew part. How much the affected row/column
// changed is not constrained; the reattached band may twist and link freely.
inline bool is_band_move(const SeifertMatrix& before, const SeifertMatrix& after,
                         std::size_t band_index) {
  if (before.dimension() != after.dimension())
    fail(errc::dimension_mismatch, "band move relates matrices of equal dimension");
  const std::size_t n = before.dimension();
  if (band_index < 1 || band_index > n)
    fail(errc::index_out_of_range, "band index must lie in 1.." + std::to_string(n));
  const std::size_t b = band_index - 1;
  const IntMatrix& x = before.matrix();
  const IntMatrix& y = after.matrix();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != b && j != b && x(i, j) != y(i, j)) return false;
  return before.skew_part() == after.skew_part();
}

inline bool is_band_move(const BandMoveClaim& claim) {
  return is_band_move(claim.before, claim.after, claim.band_index);
}

}  // namespace concord
