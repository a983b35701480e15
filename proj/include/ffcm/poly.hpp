#pragma once

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ffcm/field.hpp"

namespace ffcm {

// deg 0 = NEG_INF so that |g| = q^{deg g} gives |0| = 0 uniformly.
inline constexpr int kDegNegInf = std::numeric_limits<int>::min() / 4;

// Element of F_q[t]: little-endian coefficient codes, normalized so the
// leading coefficient is nonzero (zero polynomial = empty vector).
struct Poly {
  std::vector<felem> c;

  Poly() = default;
  explicit Poly(std::vector<felem> coeffs) : c(std::move(coeffs)) { normalize(); }

  void normalize() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  int deg() const { return c.empty() ? kDegNegInf : static_cast<int>(c.size()) - 1; }
  felem coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c.size())) ? c[i] : 0;
  }
  felem lead() const { return c.empty() ? 0 : c.back(); }

  bool operator==(const Poly& o) const { return c == o.c; }
  bool operator!=(const Poly& o) const { return !(*this == o); }
  // degree-then-coefficient order; used to keep reports deterministic
  bool operator<(const Poly& o) const {
    if (c.size() != o.c.size()) return c.size() < o.c.size();
    for (std::size_t i = c.size(); i-- > 0;)
      if (c[i] != o.c[i]) return c[i] < o.c[i];
    return false;
  }
};

inline Poly poly_of(std::initializer_list<int> coeffs) {
  std::vector<felem> c;
  for (int v : coeffs) c.push_back(static_cast<felem>(v));
  return Poly(std::move(c));
}

inline Poly poly_zero() { return Poly{}; }
inline Poly poly_const(felem a) { return a == 0 ? Poly{} : Poly{{a}}; }
inline Poly poly_one() { return poly_const(1); }
inline Poly poly_t(int e = 1) {
  std::vector<felem> c(e + 1, 0);
  c[e] = 1;
  return Poly(std::move(c));
}

inline Poly padd(const Field& F, const Poly& a, const Poly& b) {
  std::vector<felem> c(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = F.add(a.coeff(i), b.coeff(i));
  return Poly(std::move(c));
}

inline Poly pneg(const Field& F, const Poly& a) {
  std::vector<felem> c(a.c.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = F.neg(a.c[i]);
  return Poly(std::move(c));
}

inline Poly psub(const Field& F, const Poly& a, const Poly& b) {
  return padd(F, a, pneg(F, b));
}

inline Poly pscale(const Field& F, felem s, const Poly& a) {
  if (s == 0) return Poly{};
  std::vector<felem> c(a.c.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = F.mul(s, a.c[i]);
  return Poly(std::move(c));
}

inline Poly pmul(const Field& F, const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly{};
  std::vector<felem> c(a.c.size() + b.c.size() - 1, 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j)
      c[i + j] = F.add(c[i + j], F.mul(a.c[i], b.c[j]));
  }
  return Poly(std::move(c));
}

// a = q*b + r with deg r < deg b.  b must be nonzero.
inline std::pair<Poly, Poly> pdivrem(const Field& F, const Poly& a, const Poly& b) {
  require(!b.is_zero(), "polynomial division by zero");
  Poly r = a;
  int db = b.deg();
  felem lead_inv = F.inv(b.lead());
  std::vector<felem> quot;
  if (r.deg() >= db) quot.assign(r.deg() - db + 1, 0);
  while (r.deg() >= db) {
    int shift = r.deg() - db;
    felem f = F.mul(r.lead(), lead_inv);
    quot[shift] = f;
    for (int i = 0; i <= db; ++i)
      r.c[shift + i] = F.sub(r.c[shift + i], F.mul(f, b.coeff(i)));
    r.normalize();
  }
  return {Poly(std::move(quot)), r};
}

inline Poly pmod(const Field& F, const Poly& a, const Poly& b) {
  return pdivrem(F, a, b).second;
}

inline Poly pmonic(const Field& F, const Poly& a) {
  if (a.is_zero()) return a;
  return pscale(F, F.inv(a.lead()), a);
}

// Monic gcd; gcd(0,0) = 0.
inline Poly pgcd(const Field& F, Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = pmod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return pmonic(F, a);
}

inline Poly ppow(const Field& F, Poly base, long e) {
  Poly r = poly_one();
  while (e > 0) {
    if (e & 1) r = pmul(F, r, base);
    base = pmul(F, base, base);
    e >>= 1;
  }
  return r;
}

// Evaluation at a field element.
inline felem peval(const Field& F, const Poly& a, felem x) {
  felem r = 0;
  for (std::size_t i = a.c.size(); i-- > 0;) r = F.add(F.mul(r, x), a.c[i]);
  return r;
}

inline bool pcoprime(const Field& F, const Poly& a, const Poly& b) {
  return pgcd(F, a, b).deg() == 0;
}

// ---- enumeration -------------------------------------------------------

// Decode index -> polynomial of degree < D (all q^D of them).
inline Poly poly_from_index(const Field& F, std::uint64_t idx, int D) {
  std::vector<felem> c(D, 0);
  for (int i = 0; i < D; ++i) {
    c[i] = static_cast<felem>(idx % F.q);
    idx /= F.q;
  }
  return Poly(std::move(c));
}

inline std::uint64_t poly_count(const Field& F, int D) {
  std::uint64_t n = 1;
  for (int i = 0; i < D; ++i) n *= static_cast<std::uint64_t>(F.q);
  return n;
}

// All monic polynomials of exact degree dgr, in index order.
inline Poly monic_from_index(const Field& F, std::uint64_t idx, int dgr) {
  Poly g = poly_from_index(F, idx, dgr);
  g.c.resize(dgr + 1, 0);
  g.c[dgr] = 1;
  return g;
}

// ---- irreducibles, factorization, Moebius ------------------------------

// All monic irreducibles of degree <= D, sorted (degree, then coeffs).
// Sieve by trial division; desk scale (D <= 8 or so).
inline std::vector<Poly> irreducibles(const Field& F, int D) {
  require(D >= 1, "irreducibles: D >= 1 required");
  std::vector<Poly> primes;
  for (int dgr = 1; dgr <= D; ++dgr) {
    std::uint64_t count = poly_count(F, dgr);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Poly g = monic_from_index(F, idx, dgr);
      bool irred = true;
      for (const Poly& pi : primes) {
        if (2 * pi.deg() > dgr) break;
        if (pmod(F, g, pi).is_zero()) {
          irred = false;
          break;
        }
      }
      if (irred) primes.push_back(g);
    }
  }
  return primes;
}

// Factorization of a monic nonzero polynomial by trial division.
// Returns (prime, multiplicity) pairs sorted by prime.
inline std::vector<std::pair<Poly, int>> factor_monic(const Field& F, Poly g) {
  require(!g.is_zero(), "cannot factor zero");
  require(g.lead() == 1, "factor_monic expects a monic polynomial");
  std::vector<std::pair<Poly, int>> out;
  if (g.deg() == 0) return out;
  auto primes = irreducibles(F, g.deg());
  for (const Poly& pi : primes) {
    if (pi.deg() > g.deg()) break;
    int e = 0;
    while (true) {
      auto [quot, rem] = pdivrem(F, g, pi);
      if (!rem.is_zero()) break;
      g = quot;
      ++e;
    }
    if (e) out.emplace_back(pi, e);
    if (g.deg() == 0) break;
  }
  require(g.deg() == 0, "incomplete factorization");
  return out;
}

// Function-field Moebius function on monic g.
inline int mobius(const Field& F, const Poly& g) {
  require(!g.is_zero() && g.lead() == 1, "mobius expects monic nonzero g");
  if (g.deg() == 0) return 1;
  auto fac = factor_monic(F, g);
  for (auto& [pi, e] : fac)
    if (e > 1) return 0;
  return (fac.size() % 2 == 0) ? 1 : -1;
}

// ---- text form ----------------------------------------------------------

// Comma-separated little-endian coefficients; each coefficient in the
// field's element text form ("0.1" style for k > 1).
inline std::string poly_str(const Field& F, const Poly& a) {
  if (a.is_zero()) return "0";
  std::string s;
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (i) s += ",";
    s += F.elem_str(a.c[i]);
  }
  return s;
}

inline Poly poly_parse(const Field& F, const std::string& text) {
  std::vector<felem> c;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) c.push_back(F.elem_parse(tok));
  return Poly(std::move(c));
}

// Coefficient embedding along F_p -> F_{p^s}; defined for prime base
// fields, where constants keep their codes.
inline Poly poly_embed(const Field& from, const Field& to, const Poly& a) {
  require(from.k == 1 && to.p == from.p, "embedding defined for prime base fields");
  return a;  // codes < p are valid constant codes in the extension
}

}  // namespace ffcm
