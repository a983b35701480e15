#include <catch2/catch_amalgamated.hpp>

#include "ffcm/cyclotomic.hpp"

using namespace ffcm;

TEST_CASE("canonical form subtracts the minimum entry") {
  Cyclotomic z(3);
  z.c = {BigInt(5), BigInt(2), BigInt(2)};
  Cyclotomic c = z.canonical();
  REQUIRE(c.c[0] == 3);
  REQUIRE(c.c[1] == 0);
  REQUIRE(c.c[2] == 0);
  // 5 + 2z + 2z^2 = 3 exactly
  REQUIRE(z == Cyclotomic::integer(3, 3));
  REQUIRE(z.is_rational());
  REQUIRE(z.to_integer() == 3);
}

TEST_CASE("1 + zeta + zeta^2 = 0") {
  Cyclotomic z = Cyclotomic::integer(3, 1) + Cyclotomic::zeta_pow(3, 1) +
                 Cyclotomic::zeta_pow(3, 2);
  REQUIRE(z.is_zero());
}

TEST_CASE("multiplication wraps exponents mod p") {
  Cyclotomic a = Cyclotomic::zeta_pow(3, 2);
  REQUIRE(a * a == Cyclotomic::zeta_pow(3, 1));
  Cyclotomic b = Cyclotomic::zeta_pow(5, 3);
  REQUIRE(b * b * b * b * b == Cyclotomic::integer(5, 1));
}

TEST_CASE("conjugation and magnitude") {
  // z = 1 + zeta_3: |z|^2 = (1+zeta)(1+zeta^2) = 1 + zeta + zeta^2 + 1 = 1
  Cyclotomic z = Cyclotomic::integer(3, 1) + Cyclotomic::zeta_pow(3, 1);
  REQUIRE(magnitude_squared_rational(z) == Rat(1));
  REQUIRE(z.magnitude_squared().is_real());
  // |a|^2 of a rational integer
  REQUIRE(magnitude_squared_rational(Cyclotomic::integer(3, -7)) == Rat(49));
}

TEST_CASE("rationality detection") {
  Cyclotomic z(3);
  z.c = {BigInt(4), BigInt(1), BigInt(2)};
  REQUIRE_FALSE(z.is_rational());
  REQUIRE_THROWS_AS(z.to_integer(), invariant_error);
  // p = 2: zeta_2 = -1, always rational
  Cyclotomic w(2);
  w.c = {BigInt(3), BigInt(5)};
  REQUIRE(w.is_rational());
  REQUIRE(w.to_integer() == -2);
}

TEST_CASE("complex embedding matches known values") {
  Cyclotomic z = Cyclotomic::zeta_pow(3, 1) + Cyclotomic::zeta_pow(3, 2);  // = -1
  auto e = z.embed();
  REQUIRE(std::abs(e.real() + 1.0) < 1e-12);
  REQUIRE(std::abs(e.imag()) < 1e-12);
}

TEST_CASE("normalized sums compare across scales") {
  // 9 * q^{-2} == 1 * q^0 for q = 3
  NormalizedSum a(Cyclotomic::integer(3, 9), -2, 3);
  NormalizedSum b(Cyclotomic::integer(3, 1), 0, 3);
  REQUIRE(a.equals(b));
  REQUIRE(a.to_rational() == Rat(1));
  NormalizedSum c = a * b;
  REQUIRE(c.to_rational() == Rat(1));
  NormalizedSum d(Cyclotomic::integer(3, 2), 0, 3);
  REQUIRE_FALSE(a.equals(d));
}
