#pragma once

#include "concord/matrix.hpp"

namespace concord::catalog {

// The 6x6 Seifert matrix of the connected sum of twisted doubles with
// framings 2, 2, 4: block sum of [[-1,1],[0,2]], [[-1,1],[0,2]], [[-1,1],[0,4]].
inline IntMatrix v1() {
  return IntMatrix::from_rows({
      {-1, 1, 0, 0, 0, 0},
      {0, 2, 0, 0, 0, 0},
      {0, 0, -1, 1, 0, 0},
      {0, 0, 0, 2, 0, 0},
      {0, 0, 0, 0, -1, 1},
      {0, 0, 0, 0, 0, 4},
  });
}

// The matrix reached from v1 by cutting band 1 and reattaching it with new
// twisting and linking: only row 1 and column 1 differ, the skew part is
// unchanged, and the Alexander polynomial collapses to a unit.
inline IntMatrix v2() {
  return IntMatrix::from_rows({
      {3, 0, 1, 0, 0, 4},
      {-1, 2, 0, 0, 0, 0},
      {1, 0, -1, 1, 0, 0},
      {0, 0, 0, 2, 0, 0},
      {0, 0, 0, 0, -1, 1},
      {4, 0, 0, 0, 0, 4},
  });
}

// v2 with entry (2,4) flipped from 0 to 1: still a valid Seifert matrix, but
// the difference from v1 leaves row/column 1, so no single band move relates
// them. Negative-test fixture.
inline IntMatrix v2_tampered() {
  IntMatrix m = v2();
  m(1, 3) = 1;
  return m;
}

// The right-handed trefoil; handy as a nontrivial small example.
inline IntMatrix trefoil() {
  return IntMatrix::from_rows({
      {-1, 1},
      {0, -1},
  });
}

}  // namespace concord::catalog
