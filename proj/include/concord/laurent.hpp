#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <utility>

#include "concord/error.hpp"
#include "concord/integer.hpp"

namespace concord {

// Integer Laurent polynomial in one variable t. Exponents may be negative;
// coefficients are arbitrary-precision integers. The zero polynomial stores
// no terms, and no stored coefficient is ever zero.
class LaurentPoly {
 public:
  using exponent_type = std::int64_t;
  using term_map = std::map<exponent_type, Int>;

  LaurentPoly() = default;  // zero

  static LaurentPoly constant(Int c) { return monomial(std::move(c), 0); }

  static LaurentPoly monomial(Int c, exponent_type e) {
    LaurentPoly p;
    if (c != 0) p.terms_.emplace(e, std::move(c));
    return p;
  }

  static LaurentPoly one() { return constant(1); }
  static LaurentPoly variable() { return monomial(1, 1); }

  bool is_zero() const { return terms_.empty(); }

  bool is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
  }

  const term_map& terms() const { return terms_; }

  Int coeff(exponent_type e) const {
    const auto it = terms_.find(e);
    return it == terms_.end() ? Int(0) : it->second;
  }

  // Lowest/highest exponent with a nonzero coefficient; zero polynomial has neither.
  exponent_type min_exponent() const { return terms_.begin()->first; }
  exponent_type max_exponent() const { return terms_.rbegin()->first; }

  LaurentPoly operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }

  LaurentPoly& operator+=(const LaurentPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
  }

  LaurentPoly& operator-=(const LaurentPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs += rhs; }
  friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs -= rhs; }

  friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
    LaurentPoly r;
    for (const auto& [ea, ca] : lhs.terms_)
      for (const auto& [eb, cb] : rhs.terms_) r.add_term(ea + eb, ca * cb);
    return r;
  }

  // Multiplication by the unit t^k.
  LaurentPoly shifted(exponent_type k) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e + k, c);
    return r;
  }

  // The substitution t -> t^-1.
  LaurentPoly reversed() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
    return r;
  }

  LaurentPoly scaled(const Int& c) const {
    LaurentPoly r;
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
  }

  // Exact evaluation at an integer point. Negative exponents make the value a
  // rational number; at a = 0 they leave it undefined.
  Rational evaluate(const Int& a) const {
    Rational total = 0;
    for (const auto& [e, c] : terms_) {
      if (e >= 0) {
        total += Rational(c * int_pow(a, e));
      } else {
        if (a == 0) fail(errc::undefined_at_zero, "negative exponent evaluated at t = 0");
        const Int den = int_pow(a, -e);  // the constructor wants a positive denominator
        total += den > 0 ? Rational(c, den) : Rational(-c, -den);
      }
    }
    return total;
  }

  friend bool operator==(const LaurentPoly& lhs, const LaurentPoly& rhs) {
    return lhs.terms_ == rhs.terms_;
  }
  friend bool operator!=(const LaurentPoly& lhs, const LaurentPoly& rhs) { return !(lhs == rhs); }

  // Rendering: terms in decreasing exponent, e.g. "-2*t^2 + 5*t - 2", "t^-3", "0".
  std::string to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      const bool negative = c < 0;
      const Int mag = negative ? Int(-c) : c;
      if (first) {
        if (negative) out << "-";
        first = false;
      } else {
        out << (negative ? " - " : " + ");
      }
      if (mag != 1 || e == 0) out << mag;
      if (e != 0) {
        if (mag != 1) out << "*";
        out << "t";
        if (e != 1) out << "^" << e;
      }
    }
    return out.str();
  }

 private:
  term_map terms_;

  void add_term(exponent_type e, Int c) {
    if (c == 0) return;
    const auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, std::move(c));
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  static Int int_pow(const Int& base, exponent_type e) {
    Int r = 1;
    for (exponent_type i = 0; i < e; ++i) r *= base;
    return r;
  }
};

// Canonical representative of the unit class {±t^k * p}: nonnegative
// exponents, nonzero constant term, and value +1 at t = 1. Defined exactly
// when p(1) = ±1, which holds for every det(V - t*V^t).
inline LaurentPoly normalize_alexander(const LaurentPoly& p) {
  if (p.is_zero()) fail(errc::non_unit_value, "zero polynomial cannot be normalized");
  const Rational at_one = p.evaluate(1);
  const LaurentPoly shifted = p.shifted(-p.min_exponent());
  if (at_one == 1) return shifted;
  if (at_one == -1) return -shifted;
  fail(errc::non_unit_value,
       "polynomial evaluates to " + at_one.str() + " at t = 1, expected +1 or -1");
}

}  // namespace concord
