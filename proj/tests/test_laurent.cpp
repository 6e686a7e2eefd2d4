#include <catch2/catch_amalgamated.hpp>

#include "concord/laurent.hpp"
#include "support/checks.hpp"
#include "support/generators.hpp"

using concord::Int;
using concord::LaurentPoly;
using concord::Rational;

namespace {

LaurentPoly poly(std::initializer_list<std::pair<std::int64_t, int>> terms) {
  LaurentPoly p;
  for (const auto& [e, c] : terms) p += LaurentPoly::monomial(c, e);
  return p;
}

}  // namespace

TEST_CASE("zero polynomial stores no terms") {
  const LaurentPoly p = poly({{2, 3}, {0, -1}});
  CHECK((p - p).is_zero());
  CHECK((p - p).terms().empty());
  CHECK(LaurentPoly{}.is_zero());
  CHECK(LaurentPoly::monomial(0, 5).is_zero());
}

TEST_CASE("arithmetic basics") {
  const LaurentPoly p = poly({{-1, 2}, {0, 1}});
  const LaurentPoly q = poly({{1, -3}, {3, 4}});
  CHECK(p + q - q == p);
  CHECK(p * LaurentPoly::one() == p);
  CHECK(p * LaurentPoly{} == LaurentPoly{});
  CHECK(-(-p) == p);
  CHECK(p.shifted(2).min_exponent() == 1);
  CHECK(p.reversed().reversed() == p);
  CHECK(poly({{0, 1}, {1, 1}}) * poly({{0, 1}, {1, -1}}) == poly({{0, 1}, {2, -1}}));
}

TEST_CASE("evaluation is exact, rational for negative exponents") {
  const LaurentPoly p = poly({{-2, 3}, {1, 5}});
  CHECK(p.evaluate(2) == Rational(3, 4) + 10);
  CHECK(p.evaluate(1) == 8);
  CHECK(p.evaluate(-1) == -2);
  CHECK(LaurentPoly{}.evaluate(0) == 0);
  CHECK(poly({{0, 7}}).evaluate(0) == 7);
  CHECK(poly({{2, 7}}).evaluate(0) == 0);
  CHECK(checks::error_code_of([&] { p.evaluate(0); }) == concord::errc::undefined_at_zero);
}

TEST_CASE("rendering") {
  CHECK(LaurentPoly{}.to_string() == "0");
  CHECK(LaurentPoly::one().to_string() == "1");
  CHECK(LaurentPoly::monomial(1, 3).to_string() == "t^3");
  CHECK(LaurentPoly::monomial(-1, -1).to_string() == "-t^-1");
  CHECK(poly({{2, -2}, {1, 5}, {0, -2}}).to_string() == "-2*t^2 + 5*t - 2");
}

TEST_CASE("normalize_alexander examples") {
  CHECK(concord::normalize_alexander(LaurentPoly::monomial(1, 3)) == LaurentPoly::one());
  CHECK(concord::normalize_alexander(LaurentPoly::one()) == LaurentPoly::one());
  // -2t^3 + 5t^2 - 2t: divide by t, value at 1 is already +1
  CHECK(concord::normalize_alexander(poly({{3, -2}, {2, 5}, {1, -2}})) ==
        poly({{2, -2}, {1, 5}, {0, -2}}));
}

TEST_CASE("normalize_alexander fixes sign and shift") {
  const LaurentPoly canonical = poly({{2, -2}, {1, 5}, {0, -2}});
  CHECK(concord::normalize_alexander(-canonical) == canonical);
  CHECK(concord::normalize_alexander(canonical.shifted(-4)) == canonical);
  CHECK(concord::normalize_alexander(-canonical.shifted(7)) == canonical);
  const LaurentPoly result = concord::normalize_alexander(canonical);
  CHECK(result.min_exponent() == 0);
  CHECK(result.coeff(0) != 0);
  CHECK(result.evaluate(1) == 1);
}

TEST_CASE("normalize_alexander rejects non-unit values at t = 1") {
  const auto code = [](const LaurentPoly& p) {
    return checks::error_code_of([&] { concord::normalize_alexander(p); });
  };
  CHECK(code(LaurentPoly{}) == concord::errc::non_unit_value);
  CHECK(code(poly({{0, 2}})) == concord::errc::non_unit_value);
  CHECK(code(poly({{0, 1}, {1, 1}})) == concord::errc::non_unit_value);
}

TEST_CASE("property: evaluation is multiplicative") {
  gen::Rng rng(20260810);
  int checked = 0;
  for (int iter = 0; iter < 250; ++iter) {
    const LaurentPoly p = gen::random_laurent(rng);
    const LaurentPoly q = gen::random_laurent(rng);
    const LaurentPoly product = p * q;
    for (int a = -3; a <= 3; ++a) {
      if (a == 0) continue;
      REQUIRE(product.evaluate(a) == p.evaluate(a) * q.evaluate(a));
      ++checked;
    }
  }
  CHECK(checked >= 200);
}

TEST_CASE("property: normalize_alexander is idempotent and unit-invariant") {
  gen::Rng rng(424242);
  for (int iter = 0; iter < 250; ++iter) {
    // Build q with q(1) = 1, then hide it behind a random unit +-t^k.
    LaurentPoly q = gen::random_laurent(rng, 4, 3, 6);
    q += LaurentPoly::constant(1 - numerator(q.evaluate(1)));
    const int shift = gen::random_int(rng, -4, 4);
    LaurentPoly disguised = q.shifted(shift);
    if (gen::random_int(rng, 0, 1) == 1) disguised = -disguised;

    const LaurentPoly canonical = concord::normalize_alexander(q);
    REQUIRE(concord::normalize_alexander(disguised) == canonical);
    REQUIRE(concord::normalize_alexander(canonical) == canonical);
    REQUIRE(canonical.evaluate(1) == 1);
    REQUIRE(canonical.min_exponent() == 0);
  }
}
