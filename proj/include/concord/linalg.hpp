#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "concord/laurent.hpp"
#include "concord/matrix.hpp"

namespace concord {

using PolyMatrix = SquareMatrix<LaurentPoly>;

// Determinant of an integer matrix by Bareiss fraction-free elimination.
// Every division in the update is exact, so intermediates stay integral.
inline Int integer_determinant(IntMatrix a) {
  const std::size_t n = a.dimension();
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && a(r, k) == 0) ++r;
      if (r == n) return 0;
      for (std::size_t j = k; j < n; ++j) std::swap(a(k, j), a(r, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign > 0 ? a(n - 1, n - 1) : Int(-a(n - 1, n - 1));
}

struct Inertia {
  int signature = 0;
  int nullity = 0;

  friend bool operator==(const Inertia&, const Inertia&) = default;
};

// Signature and nullity of a symmetric integer matrix by congruence
// reduction over exact rationals. Diagonal pivots contribute their sign; a
// trailing block whose diagonal vanishes but which has a nonzero entry
// a[p][q] holds a hyperbolic plane, contributing one +1 and one -1.
inline Inertia symmetric_signature(const IntMatrix& s) {
  const std::size_t n = s.dimension();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (s(i, j) != s(j, i)) fail(errc::not_symmetric, "signature needs a symmetric matrix");

  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(s(i, j));

  const auto swap_rc = [&](std::size_t x, std::size_t y) {
    if (x == y) return;
    std::swap(a[x], a[y]);
    for (std::size_t i = 0; i < n; ++i) std::swap(a[i][x], a[i][y]);
  };

  int positive = 0, negative = 0, nullity = 0;
  std::size_t k = 0;
  while (k < n) {
    std::size_t p = k;
    while (p < n && a[p][p] == 0) ++p;
    if (p < n) {
      swap_rc(p, k);
      const Rational d = a[k][k];
      (d > 0 ? positive : negative) += 1;
      for (std::size_t i = k + 1; i < n; ++i)
        for (std::size_t j = k + 1; j < n; ++j) a[i][j] -= a[i][k] * a[k][j] / d;
      k += 1;
      continue;
    }
    // Whole trailing diagonal is zero: hunt for any nonzero entry.
    std::size_t pr = n, pc = n;
    for (std::size_t i = k; i < n && pr == n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (a[i][j] != 0) {
          pr = i;
          pc = j;
          break;
        }
    if (pr == n) {
      nullity += static_cast<int>(n - k);  // trailing block is identically zero
      break;
    }
    swap_rc(pr, k);
    swap_rc(pc, k + 1);
    const Rational b = a[k][k + 1];
    positive += 1;
    negative += 1;
    // Block congruence against [[0, b], [b, 0]]: subtract C * P^-1 * C^t.
    std::vector<Rational> u(n), v(n);
    for (std::size_t i = k + 2; i < n; ++i) {
      u[i] = a[i][k];
      v[i] = a[i][k + 1];
    }
    for (std::size_t i = k + 2; i < n; ++i)
      for (std::size_t j = k + 2; j < n; ++j) a[i][j] -= (u[i] * v[j] + v[i] * u[j]) / b;
    k += 2;
  }
  return Inertia{positive - negative, nullity};
}

namespace detail {

// Evaluate a polynomial with nonnegative exponents at an integer point.
inline Int eval_poly_at(const LaurentPoly& p, const Int& x, std::int64_t shift) {
  Int total = 0;
  for (const auto& [e, c] : p.terms()) {
    Int power = 1;
    for (std::int64_t i = 0; i < e - shift; ++i) power *= x;
    total += c * power;
  }
  return total;
}

}  // namespace detail

// Determinant of a matrix of Laurent polynomials, exact.
//
// Factor t^(lowest exponent) out of each row so entries become ordinary
// polynomials, evaluate the matrix at enough distinct integer nodes
// (0, 1, -1, 2, -2, ...), take exact integer determinants, interpolate the
// results over the rationals (Newton divided differences), and restore the
// factored power of t. The node count is 1 + sum of the row degree spans,
// which for entries of degree <= 1 is dimension + 1.
inline LaurentPoly poly_matrix_det(const PolyMatrix& m) {
  const std::size_t n = m.dimension();
  if (n == 0) return LaurentPoly::one();

  std::int64_t shift = 0;
  std::int64_t degree = 0;
  std::vector<std::int64_t> row_lo(n);
  for (std::size_t i = 0; i < n; ++i) {
    bool any = false;
    std::int64_t lo = 0, hi = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const LaurentPoly& e = m(i, j);
      if (e.is_zero()) continue;
      if (!any) {
        lo = e.min_exponent();
        hi = e.max_exponent();
        any = true;
      } else {
        lo = std::min(lo, e.min_exponent());
        hi = std::max(hi, e.max_exponent());
      }
    }
    if (!any) return LaurentPoly{};  // a zero row
    row_lo[i] = lo;
    shift += lo;
    degree += hi - lo;
  }

  const std::size_t count = static_cast<std::size_t>(degree) + 1;
  std::vector<Int> nodes(count);
  for (std::size_t k = 0; k < count; ++k) {
    const std::int64_t half = static_cast<std::int64_t>((k + 1) / 2);
    nodes[k] = (k % 2 == 1) ? Int(half) : Int(-half);  // 0, 1, -1, 2, -2, ...
  }

  std::vector<Rational> values(count);
  for (std::size_t k = 0; k < count; ++k) {
    IntMatrix a(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        a(i, j) = detail::eval_poly_at(m(i, j), nodes[k], row_lo[i]);
    values[k] = Rational(integer_determinant(std::move(a)));
  }

  // Newton divided differences, then expansion into monomial coefficients.
  std::vector<Rational> dd = values;
  for (std::size_t level = 1; level < count; ++level)
    for (std::size_t k = count - 1; k >= level; --k)
      dd[k] = (dd[k] - dd[k - 1]) / Rational(nodes[k] - nodes[k - level]);

  std::vector<Rational> coeffs(count, Rational(0));
  for (std::size_t k = count; k-- > 0;) {
    // coeffs <- coeffs * (x - nodes[k]) + dd[k]
    for (std::size_t j = count - 1; j >= 1; --j)
      coeffs[j] = coeffs[j - 1] - Rational(nodes[k]) * coeffs[j];
    coeffs[0] = dd[k] - Rational(nodes[k]) * coeffs[0];
  }

  LaurentPoly det;
  for (std::size_t j = 0; j < count; ++j) {
    if (coeffs[j] == 0) continue;
    if (denominator(coeffs[j]) != 1)
      throw std::logic_error("poly_matrix_det: interpolated coefficient is not integral");
    det += LaurentPoly::monomial(numerator(coeffs[j]), static_cast<std::int64_t>(j) + shift);
  }
  return det;
}

}  // namespace concord
