#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "ffcm/poly.hpp"

using namespace ffcm;

namespace {
Poly rand_poly(const Field& F, int max_deg, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> deg(0, max_deg), coef(0, F.q - 1);
  int d = deg(rng);
  std::vector<felem> c(d + 1);
  for (auto& x : c) x = static_cast<felem>(coef(rng));
  return Poly(std::move(c));
}

// Necklace census: number of monic irreducibles of degree m over F_q is
// (1/m) sum_{d | m} mu(d) q^{m/d}.
long necklace_count(int q, int m) {
  auto mu_int = [](int n) {
    int result = 1;
    for (int p = 2; p * p <= n; ++p)
      if (n % p == 0) {
        n /= p;
        if (n % p == 0) return 0;
        result = -result;
      }
    if (n > 1) result = -result;
    return result;
  };
  long total = 0;
  for (int d = 1; d <= m; ++d)
    if (m % d == 0) {
      long qe = 1;
      for (int i = 0; i < m / d; ++i) qe *= q;
      total += mu_int(d) * qe;
    }
  return total / m;
}
}  // namespace

TEST_CASE("division with remainder") {
  Field F(3);
  // a = t^2 + 1, b = t  ->  q = t, r = 1
  Poly a = poly_of({1, 0, 1}), b = poly_t();
  auto [quot, rem] = pdivrem(F, a, b);
  REQUIRE(quot == poly_t());
  REQUIRE(rem == poly_one());
  REQUIRE_THROWS_AS(pdivrem(F, a, poly_zero()), invariant_error);
}

TEST_CASE("gcd is monic") {
  Field F(5);
  // gcd(t^2 - 1, t - 1) = t - 1
  Poly a = poly_of({4, 0, 1});
  Poly b = poly_of({4, 1});
  REQUIRE(pgcd(F, a, b) == b);
  Field F3(3);
  REQUIRE(pgcd(F3, poly_t(), poly_of({1, 1})).deg() == 0);  // coprime
  // non-monic inputs still give monic gcd
  Poly c = pscale(F, 3, a);
  REQUIRE(pgcd(F, c, pscale(F, 2, b)) == b);
}

TEST_CASE("degree sentinel and norms") {
  REQUIRE(poly_zero().deg() == kDegNegInf);
  REQUIRE(poly_one().deg() == 0);
  REQUIRE(poly_t(3).deg() == 3);
}

TEST_CASE("irreducible enumeration matches the necklace census") {
  for (int q : {2, 3, 5}) {
    Field F(q);
    auto primes = irreducibles(F, 4);
    for (int m = 1; m <= 4; ++m) {
      long count = 0;
      for (const auto& g : primes)
        if (g.deg() == m) ++count;
      REQUIRE(count == necklace_count(q, m));
    }
    // sorted, duplicate-free
    for (std::size_t i = 1; i < primes.size(); ++i) REQUIRE(primes[i - 1] < primes[i]);
  }
}

TEST_CASE("named irreducible counts") {
  Field F3(3);
  auto p1 = irreducibles(F3, 1);
  REQUIRE(p1.size() == 3);  // t, t+1, t+2
  REQUIRE(p1[0] == poly_t());
  auto p2 = irreducibles(F3, 2);
  REQUIRE(p2.size() - p1.size() == 3);  // (9-3)/2

  // brute-force oracle for degree 2 over F_3: no roots
  long no_root = 0;
  for (std::uint64_t idx = 0; idx < poly_count(F3, 2); ++idx) {
    Poly g = monic_from_index(F3, idx, 2);
    bool root = false;
    for (int x = 0; x < 3 && !root; ++x) root = (peval(F3, g, static_cast<felem>(x)) == 0);
    if (!root) ++no_root;
  }
  REQUIRE(no_root == 3);

  Field F2(2);
  auto p3 = irreducibles(F2, 3);
  long cubic = 0;
  for (const auto& g : p3)
    if (g.deg() == 3) ++cubic;
  REQUIRE(cubic == 2);  // (8-2)/3
}

TEST_CASE("mobius") {
  Field F(3);
  REQUIRE(mobius(F, poly_one()) == 1);
  REQUIRE(mobius(F, pmul(F, poly_t(), poly_t())) == 0);
  REQUIRE(mobius(F, poly_of({1, 0, 1})) == -1);  // t^2+1 irreducible over F_3
  REQUIRE_THROWS_AS(mobius(F, pscale(F, 2, poly_t())), invariant_error);

  SECTION("multiplicative on coprime monic pairs of degree <= 3") {
    std::vector<Poly> monics;
    for (int d = 0; d <= 3; ++d)
      for (std::uint64_t i = 0; i < poly_count(F, d); ++i)
        monics.push_back(monic_from_index(F, i, d));
    for (const auto& a : monics)
      for (const auto& b : monics)
        if (pcoprime(F, a, b))
          REQUIRE(mobius(F, pmul(F, a, b)) == mobius(F, a) * mobius(F, b));
  }
}

TEST_CASE("gcd degree is invariant under base change to F_9") {
  Field F3(3);
  Field F9(3, 2, {1, 0, 1});
  std::mt19937_64 rng(0x5eed);
  for (int trial = 0; trial < 200; ++trial) {
    Poly a = rand_poly(F3, 5, rng), b = rand_poly(F3, 5, rng);
    if (a.is_zero() || b.is_zero()) continue;
    Poly g = pgcd(F3, a, b);
    Poly ge = pgcd(F9, poly_embed(F3, F9, a), poly_embed(F3, F9, b));
    REQUIRE(g.deg() == ge.deg());
    REQUIRE(poly_embed(F3, F9, g) == ge);  // gcd of F_3 polys stays rational
  }
}

TEST_CASE("factorization by trial division") {
  Field F(3);
  Poly g = pmul(F, pmul(F, poly_t(), poly_t()), poly_of({1, 1}));  // t^2 (t+1)
  auto fac = factor_monic(F, g);
  REQUIRE(fac.size() == 2);
  REQUIRE(fac[0].first == poly_t());
  REQUIRE(fac[0].second == 2);
  REQUIRE(fac[1].first == poly_of({1, 1}));
  REQUIRE(fac[1].second == 1);
}

TEST_CASE("poly text form round trip") {
  Field F(3);
  Poly a = poly_of({1, 0, 2});
  REQUIRE(poly_str(F, a) == "1,0,2");
  REQUIRE(poly_parse(F, "1,0,2") == a);
  REQUIRE(poly_str(F, poly_zero()) == "0");
  Field F9(3, 2, {1, 0, 1});
  Poly b(std::vector<felem>{F9.from_coeffs({0, 1}), 1});  // u + t
  REQUIRE(poly_str(F9, b) == "0.1,1.0");
  REQUIRE(poly_parse(F9, "0.1,1") == b);  // short coefficient form parses too
}
