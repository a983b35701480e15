#include <catch2/catch_amalgamated.hpp>

#include "ffcm/laurent.hpp"

using namespace ffcm;

TEST_CASE("exact polynomial embedding") {
  Field F(3);
  Laurent x = laurent_from_poly(poly_of({1, 2}));  // 1 + 2t
  REQUIRE(x.exact());
  REQUIRE(x.digit(0) == 1);
  REQUIRE(x.digit(1) == 2);
  REQUIRE(x.digit(-5) == 0);
  REQUIRE(x.ord() == 1);
}

TEST_CASE("ratio expansion") {
  Field F(3);
  // 1/t = t^{-1}
  Laurent inv_t = laurent_of_ratio(F, poly_one(), poly_t(), -3);
  REQUIRE(inv_t.digit(-1) == 1);
  REQUIRE(inv_t.digit(-2) == 0);
  REQUIRE(inv_t.floor_ == -4);
  REQUIRE_THROWS_AS(inv_t.digit(-4), precision_error);

  // 1/(t-1) = t^{-1} + t^{-2} + ... over F_3 (geometric series)
  Laurent g = laurent_of_ratio(F, poly_one(), poly_of({2, 1}), -4);
  for (int e = -1; e >= -4; --e) REQUIRE(g.digit(e) == 1);

  // (t^2+1)/t = t + t^{-1}
  Laurent h = laurent_of_ratio(F, poly_of({1, 0, 1}), poly_t(), -2);
  REQUIRE(h.digit(1) == 1);
  REQUIRE(h.digit(0) == 0);
  REQUIRE(h.digit(-1) == 1);
  REQUIRE(h.digit(-2) == 0);
}

TEST_CASE("precision floor propagates through multiplication") {
  Field F(3);
  Laurent a = laurent_of_ratio(F, poly_one(), poly_t(), -4);  // t^{-1}, floor -5
  Laurent b = laurent_from_poly(poly_t(3));                   // exact t^3
  Laurent prod = lmul(F, a, b);
  // floor of product: floor_a + ord b = -5 + 3 = -2
  REQUIRE(prod.floor_ == -2);
  REQUIRE(prod.digit(2) == 1);
  REQUIRE_THROWS_AS(prod.digit(-2), precision_error);
}

TEST_CASE("addition takes the worse floor") {
  Field F(3);
  Laurent a = laurent_of_ratio(F, poly_one(), poly_t(), -2);
  Laurent b = laurent_of_ratio(F, poly_one(), poly_of({2, 1}), -6);
  Laurent s = ladd(F, a, b);
  REQUIRE(s.floor_ == -3);
  REQUIRE(s.digit(-1) == 2);  // 1 + 1
  REQUIRE(s.digit(-2) == 1);
  REQUIRE_THROWS_AS(s.digit(-3), precision_error);
}

TEST_CASE("fractional and polynomial parts") {
  Field F(3);
  Laurent h = laurent_of_ratio(F, poly_of({1, 0, 1}), poly_t(), -3);  // t + t^{-1}
  REQUIRE(lpoly_part(h) == poly_t());
  Laurent fr = lfrac(h);
  REQUIRE(fr.digit(-1) == 1);
  REQUIRE(fr.norm_lt(0));
  REQUIRE_FALSE(fr.norm_lt(-1));
  REQUIRE(fr.frac_norm_lt(0));
  REQUIRE_FALSE(fr.frac_norm_lt(1));
}

TEST_CASE("norm queries respect the floor") {
  Field F(3);
  Laurent a = laurent_of_ratio(F, poly_one(), poly_t(), -2);  // digits to t^{-2}
  REQUIRE(a.norm_lt(0));
  REQUIRE_FALSE(a.norm_lt(-1));
  // a known nonzero digit settles the question even past the floor
  REQUIRE_FALSE(a.norm_lt(-4));
  // but an all-zero prefix cannot: the answer is below the floor
  Laurent z = laurent_of_ratio(F, poly_zero(), poly_t(), -2);
  REQUIRE_THROWS_AS(z.norm_lt(-4), precision_error);
}

TEST_CASE("shift by powers of t") {
  Field F(3);
  Laurent a = laurent_of_ratio(F, poly_one(), poly_t(), -3);
  Laurent b = laurent_shift(a, 2);  // t
  REQUIRE(b.digit(1) == 1);
  REQUIRE(b.floor_ == -2);
}

TEST_CASE("exact zero versus zero-to-precision") {
  Field F(3);
  REQUIRE(laurent_zero().is_exact_zero());
  Laurent z = laurent_of_ratio(F, poly_zero(), poly_t(), -3);
  REQUIRE_FALSE(z.is_exact_zero());  // digits vanish but only to the floor
  REQUIRE_THROWS_AS(z.ord(), precision_error);
  REQUIRE(laurent_zero().ord() == kDegNegInf);
}

TEST_CASE("truncation weakens precision") {
  Field F(3);
  Laurent a = laurent_from_poly(poly_one());
  Laurent t = laurent_truncate(a, -3);
  REQUIRE(t.digit(0) == 1);
  REQUIRE(t.digit(-2) == 0);
  REQUIRE_THROWS_AS(t.digit(-3), precision_error);
}
