#pragma once

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "ffcm/errors.hpp"
#include "ffcm/rational.hpp"

namespace ffcm {

// Exact element of Z[zeta_p]: entry j is the coefficient of zeta_p^j.
// The single relation sum_j zeta^j = 0 is quotiented out by canonical
// form: subtract the minimum entry, making the minimum 0.
struct Cyclotomic {
  int p = 0;
  std::vector<BigInt> c;

  Cyclotomic() = default;
  explicit Cyclotomic(int p_) : p(p_), c(p_, 0) {}

  static Cyclotomic zero(int p) { return Cyclotomic(p); }
  static Cyclotomic integer(int p, const BigInt& n) {
    Cyclotomic z(p);
    z.c[0] = n;
    return z;
  }
  static Cyclotomic zeta_pow(int p, long j) {
    Cyclotomic z(p);
    j %= p;
    if (j < 0) j += p;
    z.c[static_cast<std::size_t>(j)] = 1;
    return z;
  }

  Cyclotomic& canonicalize() {
    BigInt m = c[0];
    for (const auto& x : c)
      if (x < m) m = x;
    if (m != 0)
      for (auto& x : c) x -= m;
    return *this;
  }

  Cyclotomic canonical() const {
    Cyclotomic z = *this;
    z.canonicalize();
    return z;
  }

  bool operator==(const Cyclotomic& o) const {
    require(p == o.p, "cyclotomic order mismatch");
    Cyclotomic a = canonical(), b = o.canonical();
    return a.c == b.c;
  }
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

  Cyclotomic operator+(const Cyclotomic& o) const {
    require(p == o.p, "cyclotomic order mismatch");
    Cyclotomic z(p);
    for (int j = 0; j < p; ++j) z.c[j] = c[j] + o.c[j];
    return z;
  }
  Cyclotomic operator-(const Cyclotomic& o) const {
    require(p == o.p, "cyclotomic order mismatch");
    Cyclotomic z(p);
    for (int j = 0; j < p; ++j) z.c[j] = c[j] - o.c[j];
    return z;
  }
  Cyclotomic operator*(const Cyclotomic& o) const {
    require(p == o.p, "cyclotomic order mismatch");
    Cyclotomic z(p);
    for (int j = 0; j < p; ++j) {
      if (c[j] == 0) continue;
      for (int l = 0; l < p; ++l) {
        if (o.c[l] == 0) continue;
        z.c[(j + l) % p] += c[j] * o.c[l];
      }
    }
    return z;
  }
  Cyclotomic operator*(const BigInt& n) const {
    Cyclotomic z(p);
    for (int j = 0; j < p; ++j) z.c[j] = c[j] * n;
    return z;
  }
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }

  // Complex conjugation zeta -> zeta^{-1}, i.e. entry map j -> -j.
  Cyclotomic conj() const {
    Cyclotomic z(p);
    for (int j = 0; j < p; ++j) z.c[(p - j) % p] = c[j];
    return z;
  }

  bool is_zero() const {
    Cyclotomic z = canonical();
    for (const auto& x : z.c)
      if (x != 0) return false;
    return true;
  }

  // Rational iff the zeta^1..zeta^{p-1} coefficients agree (uniform
  // subtraction of the relation); then the value is c0 - c1.
  bool is_rational() const {
    for (int j = 2; j < p; ++j)
      if (c[j] != c[1]) return false;
    return true;
  }
  BigInt to_integer() const {
    require(is_rational(), "cyclotomic value is not rational");
    return p == 1 ? c[0] : BigInt(c[0] - c[1]);
  }

  bool is_real() const { return *this == conj(); }

  // |z|^2 = z * conj(z), exact in Z[zeta_p].
  Cyclotomic magnitude_squared() const { return (*this) * conj(); }

  // Display-only complex embedding zeta = exp(2 pi i / p).
  std::complex<double> embed() const {
    std::complex<double> z(0.0, 0.0);
    for (int j = 0; j < p; ++j) {
      double th = 2.0 * M_PI * j / p;
      z += c[j].get_d() * std::complex<double>(std::cos(th), std::sin(th));
    }
    return z;
  }

  std::string str() const {
    Cyclotomic z = canonical();
    std::string s = "[";
    for (int j = 0; j < p; ++j) {
      if (j) s += ",";
      s += z.c[j].get_str();
    }
    return s + "]";
  }
};

// |z|^2 as an exact rational when it lies in Q (always for p <= 3);
// throws otherwise.
inline Rat magnitude_squared_rational(const Cyclotomic& z) {
  Cyclotomic m = z.magnitude_squared();
  require(m.is_rational(),
          "|z|^2 is irrational in this cyclotomic field; use interval compare");
  return Rat(m.to_integer());
}

// A character sum together with a power-of-q scale: value * q^{scale}.
struct NormalizedSum {
  Cyclotomic value;
  long scale = 0;  // exponent of q
  long q = 0;

  NormalizedSum() = default;
  NormalizedSum(Cyclotomic v, long sc, long q_) : value(std::move(v)), scale(sc), q(q_) {}

  NormalizedSum operator*(const NormalizedSum& o) const {
    require(q == o.q, "mixed base in normalized sums");
    return NormalizedSum(value * o.value, scale + o.scale, q);
  }

  bool equals(const NormalizedSum& o) const {
    require(q == o.q, "mixed base in normalized sums");
    // value * q^scale == o.value * q^{o.scale}: clear scales exactly
    long s = std::min(scale, o.scale);
    Cyclotomic a = value * bigpow(q, scale - s);
    Cyclotomic b = o.value * bigpow(q, o.scale - s);
    return a == b;
  }

  // The represented value as an exact rational (requires rationality).
  Rat to_rational() const {
    Rat v(value.canonical().to_integer());
    return v * qpow(q, scale);
  }

  std::string str() const {
    return "{\"zeta_counts\":" + value.str() + ",\"scale\":" + std::to_string(scale) + "}";
  }
};

}  // namespace ffcm
