#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "ffcm/poly.hpp"

namespace ffcm {

// Truncated element of K_infty = F_q((1/t)).
//
// Digits are stored for exponents in [lo, top]; exponents above top are
// zero by convention, exponents in (floor, lo) are known zero, and
// exponents <= floor are UNKNOWN.  floor == kExactFloor means the value
// is exact (all unstored digits are zero).  Queries at or below the
// floor raise precision_error instead of guessing.
inline constexpr int kExactFloor = std::numeric_limits<int>::min() / 2;

struct Laurent {
  int lo = 0;
  int floor_ = kExactFloor;
  std::vector<felem> d;  // d[i] is the digit of t^{lo+i}

  Laurent() = default;

  int top() const { return lo + static_cast<int>(d.size()) - 1; }
  bool exact() const { return floor_ == kExactFloor; }
  bool known(int e) const { return e > floor_; }

  felem digit(int e) const {
    if (!known(e))
      throw precision_error("digit at t^" + std::to_string(e) +
                            " is below the precision floor");
    if (e < lo || e > top()) return 0;
    return d[e - lo];
  }

  void normalize() {
    while (!d.empty() && d.back() == 0) d.pop_back();
    std::size_t drop = 0;
    while (drop < d.size() && d[drop] == 0) ++drop;
    if (drop) {
      d.erase(d.begin(), d.begin() + static_cast<long>(drop));
      lo += static_cast<int>(drop);
    }
    if (d.empty()) lo = (floor_ == kExactFloor) ? 0 : floor_ + 1;
    if (floor_ != kExactFloor && lo <= floor_) {
      // stored digits never reach below the floor
      throw invariant_error("laurent digits stored below floor");
    }
  }

  // Largest exponent that can carry a nonzero digit (unknown region
  // included).  kDegNegInf for the exact zero.
  int support_bound() const {
    for (std::size_t i = d.size(); i-- > 0;)
      if (d[i] != 0) return lo + static_cast<int>(i);
    return exact() ? kDegNegInf : floor_;
  }

  bool is_exact_zero() const {
    if (!exact()) return false;
    for (felem x : d)
      if (x) return false;
    return true;
  }

  // |x| < q^e, i.e. every digit at exponent >= e vanishes.  Needs those
  // digits known.
  bool norm_lt(int e) const {
    for (int i = std::max(e, lo); i <= top(); ++i)
      if (d[i - lo] != 0) return false;
    if (e <= floor_) throw precision_error("norm_lt query below precision floor");
    return true;
  }

  // ord x (largest exponent of a nonzero digit); requires the value to
  // be exactly nonzero, or provably nonzero above the floor.
  int ord() const {
    for (std::size_t i = d.size(); i-- > 0;)
      if (d[i] != 0) return lo + static_cast<int>(i);
    if (exact()) return kDegNegInf;
    throw precision_error("ord unknown: all known digits vanish");
  }

  // ||x|| < q^{-N}: the fractional digits -1..-N all vanish (N >= 1).
  bool frac_norm_lt(int N) const {
    if (N <= 0) return true;  // ||x|| < q^0 always
    for (int e = -1; e >= -N; --e)
      if (digit(e) != 0) return false;
    return true;
  }
};

inline Laurent laurent_zero() { return Laurent{}; }

inline Laurent laurent_from_poly(const Poly& a) {
  Laurent x;
  x.lo = 0;
  x.d = a.c;
  x.normalize();
  return x;
}

inline Laurent laurent_from_const(felem a) { return laurent_from_poly(poly_const(a)); }

// x * t^j
inline Laurent laurent_shift(const Laurent& x, int j) {
  Laurent r = x;
  r.lo += j;
  if (r.floor_ != kExactFloor) r.floor_ += j;
  r.normalize();
  return r;
}

inline Laurent ladd(const Field& F, const Laurent& a, const Laurent& b) {
  Laurent r;
  r.floor_ = std::max(a.floor_, b.floor_);
  int lo = std::max(std::min(a.lo, b.lo), r.floor_ == kExactFloor
                                              ? std::min(a.lo, b.lo)
                                              : r.floor_ + 1);
  int hi = std::max(a.top(), b.top());
  if (hi < lo) {
    r.lo = lo;
    r.normalize();
    return r;
  }
  r.lo = lo;
  r.d.assign(hi - lo + 1, 0);
  for (int e = lo; e <= hi; ++e) {
    felem da = (e > a.floor_) ? ((e >= a.lo && e <= a.top()) ? a.d[e - a.lo] : 0) : 0;
    felem db = (e > b.floor_) ? ((e >= b.lo && e <= b.top()) ? b.d[e - b.lo] : 0) : 0;
    r.d[e - lo] = F.add(da, db);
  }
  r.normalize();
  return r;
}

inline Laurent lneg(const Field& F, const Laurent& a) {
  Laurent r = a;
  for (auto& x : r.d) x = F.neg(x);
  return r;
}

inline Laurent lsub(const Field& F, const Laurent& a, const Laurent& b) {
  return ladd(F, a, lneg(F, b));
}

inline Laurent lscale(const Field& F, felem s, const Laurent& a) {
  Laurent r = a;
  for (auto& x : r.d) x = F.mul(s, x);
  r.normalize();
  return r;
}

// Worst-case non-archimedean precision propagation: the product digit
// at e is computable iff e exceeds max(floor_a + sb(b), floor_b + sb(a)).
inline Laurent lmul(const Field& F, const Laurent& a, const Laurent& b) {
  if (a.is_exact_zero() || b.is_exact_zero()) return Laurent{};
  auto sat = [](int f, int s) {
    if (f == kExactFloor || s == kDegNegInf) return kExactFloor;
    return f + s;
  };
  int fl = std::max(sat(a.floor_, b.support_bound()), sat(b.floor_, a.support_bound()));
  Laurent r;
  r.floor_ = fl;
  int hi = a.top() + b.top();
  int lo = (fl == kExactFloor) ? a.lo + b.lo : fl + 1;
  if (hi < lo) {
    r.lo = lo;
    r.normalize();
    return r;
  }
  r.lo = lo;
  r.d.assign(hi - lo + 1, 0);
  for (std::size_t i = 0; i < a.d.size(); ++i) {
    if (a.d[i] == 0) continue;
    int ea = a.lo + static_cast<int>(i);
    for (std::size_t j = 0; j < b.d.size(); ++j) {
      if (b.d[j] == 0) continue;
      int e = ea + b.lo + static_cast<int>(j);
      if (e < lo) continue;
      r.d[e - lo] = F.add(r.d[e - lo], F.mul(a.d[i], b.d[j]));
    }
  }
  r.normalize();
  return r;
}

inline Laurent lmul_poly(const Field& F, const Poly& a, const Laurent& b) {
  return lmul(F, laurent_from_poly(a), b);
}

// Fractional part: digits at exponents <= -1 (same floor).
inline Laurent lfrac(const Laurent& x) {
  Laurent r = x;
  while (!r.d.empty() && r.top() >= 0) r.d.pop_back();
  r.normalize();
  return r;
}

// Integral (polynomial) part: digits at exponents >= 0.
inline Poly lpoly_part(const Laurent& x) {
  if (x.floor_ >= 0)
    throw precision_error("integral part needs digits down to t^0");
  int hi = x.top();
  if (hi < 0) return Poly{};
  std::vector<felem> c(hi + 1, 0);
  for (int e = std::max(0, x.lo); e <= hi; ++e) c[e] = x.d[e - x.lo];
  return Poly(std::move(c));
}

// Laurent expansion of num/den carrying digits at exponents >= lo_keep.
// The result's floor is lo_keep - 1 even when the quotient happens to
// terminate; use laurent_from_poly for exact polynomial values.
inline Laurent laurent_of_ratio(const Field& F, const Poly& num, const Poly& den,
                                int lo_keep) {
  require(!den.is_zero(), "laurent_of_ratio: zero denominator");
  Poly n = num, dd = den;
  if (lo_keep < 0)
    n = pmul(F, n, poly_t(-lo_keep));
  else if (lo_keep > 0)
    dd = pmul(F, dd, poly_t(lo_keep));
  Poly quot = pdivrem(F, n, dd).first;
  Laurent r;
  r.lo = lo_keep;
  r.floor_ = lo_keep - 1;
  r.d = quot.c;
  r.normalize();
  return r;
}

// Forget digits at exponents <= new_floor (precision weakening).
inline Laurent laurent_truncate(const Laurent& x, int new_floor) {
  Laurent r = x;
  if (new_floor <= r.floor_) return r;
  r.floor_ = new_floor;
  while (!r.d.empty() && r.lo <= new_floor) {
    r.d.erase(r.d.begin());
    ++r.lo;
  }
  if (r.d.empty()) r.lo = new_floor + 1;
  r.normalize();
  return r;
}

inline std::string laurent_str(const Field& F, const Laurent& x) {
  std::string s;
  bool first = true;
  for (std::size_t i = x.d.size(); i-- > 0;) {
    if (x.d[i] == 0) continue;
    if (!first) s += " + ";
    s += F.elem_str(x.d[i]) + "*t^" + std::to_string(x.lo + static_cast<int>(i));
    first = false;
  }
  if (first) s = "0";
  if (!x.exact()) s += " [floor " + std::to_string(x.floor_) + "]";
  return s;
}

}  // namespace ffcm
