#pragma once

#include <array>
#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ffcm/laurent.hpp"
#include "ffcm/parallel.hpp"
#include "ffcm/poly.hpp"

namespace ffcm {

struct Monomial {
  std::vector<std::uint8_t> exps;  // length n, entries sum to d
  felem coeff = 0;
};

// System of R forms of equal degree d in n variables over F_q with
// char(F_q) > d, carrying the symmetric coefficient tensors derived
// from the monomial input.
class FormSystem {
 public:
  Field F;
  int n = 0, d = 0, R = 0;
  std::vector<std::vector<Monomial>> forms;  // per k

  FormSystem() = default;
  FormSystem(Field field, int n_, int d_, int R_,
             std::vector<std::vector<Monomial>> forms_)
      : F(std::move(field)), n(n_), d(d_), R(R_), forms(std::move(forms_)) {
    require(n >= 1 && d >= 2 && R >= 1, "need n >= 1, d >= 2, R >= 1");
    require(F.p > d, "characteristic must exceed the degree");
    require(static_cast<int>(forms.size()) == R, "expected R forms");
    for (auto& fm : forms)
      for (auto& mono : fm) {
        require(static_cast<int>(mono.exps.size()) == n, "exponent vector length != n");
        int s = 0;
        for (auto e : mono.exps) s += e;
        require(s == d, "form not homogeneous of degree d");
      }
    merge_duplicate_monomials();
    build_tensors();
    check_tensor_round_trip();
  }

  // Symmetric tensor entry c^{(k)}_{i_1..i_d} for an arbitrary index
  // tuple (0-based indices, any order).
  felem tensor(int k, std::vector<int> idx) const {
    std::sort(idx.begin(), idx.end());
    auto it = tensors_[k].find(idx);
    return it == tensors_[k].end() ? 0 : it->second;
  }

  // ---- evaluation -------------------------------------------------------

  std::vector<felem> evaluate_point(const std::vector<felem>& x) const {
    require(static_cast<int>(x.size()) == n, "point length != n");
    std::vector<felem> out(R, 0);
    for (int k = 0; k < R; ++k)
      for (const auto& mono : forms[k]) {
        felem term = mono.coeff;
        for (int i = 0; i < n && term != 0; ++i)
          for (int e = 0; e < mono.exps[i]; ++e) term = F.mul(term, x[i]);
        out[k] = F.add(out[k], term);
      }
    return out;
  }

  std::vector<Poly> evaluate(const std::vector<Poly>& x) const {
    require(static_cast<int>(x.size()) == n, "vector length != n");
    std::vector<Poly> out(R);
    for (int k = 0; k < R; ++k) {
      Poly acc;
      for (const auto& mono : forms[k]) {
        Poly term = poly_const(mono.coeff);
        for (int i = 0; i < n; ++i)
          for (int e = 0; e < mono.exps[i]; ++e) term = pmul(F, term, x[i]);
        acc = padd(F, acc, term);
      }
      out[k] = acc;
    }
    return out;
  }

  std::vector<Laurent> evaluate_laurent(const std::vector<Laurent>& x) const {
    require(static_cast<int>(x.size()) == n, "vector length != n");
    std::vector<Laurent> out(R);
    for (int k = 0; k < R; ++k) {
      Laurent acc;
      for (const auto& mono : forms[k]) {
        Laurent term = laurent_from_const(mono.coeff);
        for (int i = 0; i < n; ++i)
          for (int e = 0; e < mono.exps[i]; ++e) term = lmul(F, term, x[i]);
        acc = ladd(F, acc, term);
      }
      out[k] = acc;
    }
    return out;
  }

  // Multilinear form Psi_i^{(k)}(u^{(1)},...,u^{(d-1)}) =
  //   d! sum c^{(k)}_{i_1..i_{d-1},i} u^{(1)}_{i_1} ... u^{(d-1)}_{i_{d-1}}.
  Poly multilinear_psi(int k, int i, const std::vector<std::vector<Poly>>& u) const {
    require(static_cast<int>(u.size()) == d - 1, "need d-1 argument vectors");
    for (auto& v : u) require(static_cast<int>(v.size()) == n, "argument length != n");
    Poly acc;
    std::vector<int> idx(d, 0);
    idx[d - 1] = i;
    iterate_tuples(0, idx, [&](const std::vector<int>& tup) {
      felem c = tensor(k, tup);
      if (c == 0) return;
      Poly term = poly_const(c);
      for (int j = 0; j < d - 1; ++j) term = pmul(F, term, u[j][tup[j]]);
      acc = padd(F, acc, term);
    });
    return pscale(F, factorial_mod_p(), acc);
  }

  felem multilinear_psi_point(int k, int i,
                              const std::vector<std::vector<felem>>& u) const {
    felem acc = 0;
    std::vector<int> idx(d, 0);
    idx[d - 1] = i;
    iterate_tuples(0, idx, [&](const std::vector<int>& tup) {
      felem c = tensor(k, tup);
      if (c == 0) return;
      felem term = c;
      for (int j = 0; j < d - 1; ++j) term = F.mul(term, u[j][tup[j]]);
      acc = F.add(acc, term);
    });
    return F.mul(factorial_mod_p(), acc);
  }

  // Partial derivative forms d f_k / d x_i as monomial lists.
  const std::vector<Monomial>& gradient(int k, int i) const { return grad_[k][i]; }

  std::vector<felem> gradient_at(int k, const std::vector<felem>& x) const {
    std::vector<felem> g(n, 0);
    for (int i = 0; i < n; ++i)
      for (const auto& mono : grad_[k][i]) {
        felem term = mono.coeff;
        for (int j = 0; j < n && term != 0; ++j)
          for (int e = 0; e < mono.exps[j]; ++e) term = F.mul(term, x[j]);
        g[i] = F.add(g[i], term);
      }
    return g;
  }

  std::vector<Poly> gradient_poly_at(int k, const std::vector<Poly>& x) const {
    std::vector<Poly> g(n);
    for (int i = 0; i < n; ++i) {
      Poly acc;
      for (const auto& mono : grad_[k][i]) {
        Poly term = poly_const(mono.coeff);
        for (int j = 0; j < n; ++j)
          for (int e = 0; e < mono.exps[j]; ++e) term = pmul(F, term, x[j]);
        acc = padd(F, acc, term);
      }
      g[i] = acc;
    }
    return g;
  }

  felem factorial_mod_p() const {
    felem r = F.one();
    for (int i = 2; i <= d; ++i) r = F.mul(r, F.from_int(i));
    return r;
  }

 private:
  std::vector<std::map<std::vector<int>, felem>> tensors_;
  std::vector<std::vector<std::vector<Monomial>>> grad_;  // [k][i]

  template <typename Fn>
  void iterate_tuples(int pos, std::vector<int>& idx, Fn&& fn) const {
    if (pos == d - 1) {
      fn(idx);
      return;
    }
    for (int i = 0; i < n; ++i) {
      idx[pos] = i;
      iterate_tuples(pos + 1, idx, fn);
    }
  }

  void merge_duplicate_monomials() {
    for (auto& fm : forms) {
      std::map<std::vector<std::uint8_t>, felem> merged;
      for (auto& mono : fm) {
        auto [it, fresh] = merged.emplace(mono.exps, mono.coeff);
        if (!fresh) it->second = F.add(it->second, mono.coeff);
      }
      fm.clear();
      for (auto& [e, c] : merged)
        if (c != 0) fm.push_back({e, c});
    }
  }

  // multinomial d! / prod exps_i! is invertible since char > d
  felem multinomial(const std::vector<std::uint8_t>& exps) const {
    felem num = factorial_mod_p();
    felem den = F.one();
    for (auto e : exps)
      for (int i = 2; i <= e; ++i) den = F.mul(den, F.from_int(i));
    return F.mul(num, F.inv(den));
  }

  void build_tensors() {
    tensors_.assign(R, {});
    for (int k = 0; k < R; ++k)
      for (const auto& mono : forms[k]) {
        std::vector<int> tup;
        for (int i = 0; i < n; ++i)
          for (int e = 0; e < mono.exps[i]; ++e) tup.push_back(i);
        tensors_[k][tup] = F.mul(mono.coeff, F.inv(multinomial(mono.exps)));
      }
    grad_.assign(R, std::vector<std::vector<Monomial>>(n));
    for (int k = 0; k < R; ++k)
      for (const auto& mono : forms[k])
        for (int i = 0; i < n; ++i) {
          if (mono.exps[i] == 0) continue;
          Monomial dm = mono;
          dm.coeff = F.mul(dm.coeff, F.from_int(mono.exps[i]));
          dm.exps[i] -= 1;
          grad_[k][i].push_back(dm);
        }
  }

  // Re-expanding the tensor must reproduce the monomial map exactly.
  void check_tensor_round_trip() const {
    for (int k = 0; k < R; ++k) {
      std::map<std::vector<std::uint8_t>, felem> expanded;
      for (const auto& [tup, c] : tensors_[k]) {
        std::vector<std::uint8_t> exps(n, 0);
        for (int i : tup) exps[i] += 1;
        felem back = F.mul(c, multinomial(exps));
        expanded[exps] = back;
      }
      std::map<std::vector<std::uint8_t>, felem> original;
      for (const auto& mono : forms[k]) original[mono.exps] = mono.coeff;
      require(expanded == original, "tensor round trip failed");
    }
  }
};

// Substituted system F(x) = f(m x + b) with the admissibility
// constraints gcd(b, m) = 1 and f_i(b) = 0 mod m.
class ShiftedSystem {
 public:
  FormSystem base;
  Poly m;
  std::vector<Poly> b;

  ShiftedSystem(FormSystem sys, Poly m_, std::vector<Poly> b_)
      : base(std::move(sys)), m(std::move(m_)), b(std::move(b_)) {
    const Field& F = base.F;
    require(!m.is_zero() && m.lead() == 1, "m must be monic");
    require(static_cast<int>(b.size()) == base.n, "b length != n");
    if (m.deg() == 0) {
      for (auto& bi : b) require(bi.is_zero(), "with m = 1 the shift b must be 0");
      return;
    }
    Poly g = m;
    for (auto& bi : b) {
      require(bi.deg() < m.deg(), "deg b_i < deg m required");
      g = pgcd(F, g, bi);
    }
    require(g.deg() == 0, "gcd(b, m) = 1 required");
    auto vals = base.evaluate(b);
    for (auto& v : vals)
      require(pmod(F, v, m).is_zero(), "f(b) == 0 mod m required");
  }

  static ShiftedSystem trivial(FormSystem sys) {
    int n = sys.n;
    return ShiftedSystem(std::move(sys), poly_one(), std::vector<Poly>(n));
  }

  bool is_trivial() const { return m.deg() == 0; }

  // F(x) = f(m x + b), exact.
  std::vector<Poly> evaluate(const std::vector<Poly>& x) const {
    const Field& F = base.F;
    std::vector<Poly> y(base.n);
    for (int i = 0; i < base.n; ++i) y[i] = padd(F, pmul(F, m, x[i]), b[i]);
    return base.evaluate(y);
  }

  // The degree bound deg F(x) <= d * (deg_x_max + deg m) used to pick
  // quadrature depths.
  int degree_bound(int xdeg_max) const {
    return base.d * (xdeg_max + m.deg());
  }
};

inline ShiftedSystem shift(const FormSystem& sys, const Poly& m,
                           const std::vector<Poly>& b) {
  return ShiftedSystem(sys, m, b);
}

// Coefficient base change along F_p -> F_{p^s}.  Only prime base
// fields occur in the desk instances.
inline FormSystem base_change(const FormSystem& sys, int s) {
  require(sys.F.k == 1, "base change implemented for prime base fields");
  Field Fs(sys.F.p, s);
  return FormSystem(Fs, sys.n, sys.d, sys.R, sys.forms);
}

// ---- smoothness / Birch locus diagnostics --------------------------------

struct SmoothnessWitness {
  int s = 0;
  std::vector<felem> point;  // projective representative
};

struct SmoothnessVerdict {
  std::vector<int> checked_degrees;
  std::optional<SmoothnessWitness> witness;
  bool complete = true;  // exhaustive at every checked degree
  bool smooth() const { return !witness.has_value(); }
};

// Rank of an R x n matrix over F.
inline int matrix_rank(const Field& F, std::vector<std::vector<felem>> M) {
  int rows = static_cast<int>(M.size());
  if (rows == 0) return 0;
  int cols = static_cast<int>(M[0].size());
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (M[r][c] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(M[rank], M[pivot]);
    felem inv = F.inv(M[rank][c]);
    for (int j = c; j < cols; ++j) M[rank][j] = F.mul(inv, M[rank][j]);
    for (int r = 0; r < rows; ++r) {
      if (r == rank || M[r][c] == 0) continue;
      felem f = M[r][c];
      for (int j = c; j < cols; ++j) M[r][j] = F.sub(M[r][j], F.mul(f, M[rank][j]));
    }
    ++rank;
  }
  return rank;
}

// Exhaustive projective scan of P^{n-1}(F_{q^s}) for points on X with
// Jacobian rank < R, for each s <= s_max.
inline SmoothnessVerdict smoothness_check(const FormSystem& sys, int s_max,
                                          const Budget& budget = {}) {
  require(s_max >= 1, "s_max >= 1");
  SmoothnessVerdict verdict;
  for (int s = 1; s <= s_max; ++s) {
    FormSystem ext = (s == 1) ? sys : base_change(sys, s);
    const Field& Fs = ext.F;
    std::uint64_t Q = static_cast<std::uint64_t>(Fs.q);
    // projective points: first nonzero coordinate scaled to 1
    std::uint64_t total = 0, pw = 1;
    for (int i = 0; i < sys.n; ++i) {
      total += pw;
      pw *= Q;
    }
    budget.charge(total, "smoothness_check");
    verdict.checked_degrees.push_back(s);
    std::vector<felem> x(sys.n, 0);
    for (int lead = sys.n - 1; lead >= 0 && !verdict.witness; --lead) {
      // x[0..lead-1] = 0, x[lead] = 1, higher coordinates free
      std::uint64_t free_count = 1;
      for (int i = lead + 1; i < sys.n; ++i) free_count *= Q;
      for (std::uint64_t idx = 0; idx < free_count; ++idx) {
        std::fill(x.begin(), x.end(), 0);
        x[lead] = 1;
        std::uint64_t v = idx;
        for (int i = lead + 1; i < sys.n; ++i) {
          x[i] = static_cast<felem>(v % Q);
          v /= Q;
        }
        auto vals = ext.evaluate_point(x);
        bool on_x = true;
        for (auto val : vals)
          if (val != 0) {
            on_x = false;
            break;
          }
        if (!on_x) continue;
        std::vector<std::vector<felem>> jac(sys.R);
        for (int k = 0; k < sys.R; ++k) jac[k] = ext.gradient_at(k, x);
        if (matrix_rank(Fs, jac) < sys.R) {
          verdict.witness = SmoothnessWitness{s, x};
          break;
        }
      }
    }
  }
  return verdict;
}

struct CensusRow {
  int s = 0;
  std::uint64_t count = 0;
  double dim_estimate = 0.0;  // log_{q^s}(count), display metadata
};

// Affine census of the Birch singular locus V = {rank Jac < R} over
// F_{q^s}.
inline CensusRow birch_locus_census(const FormSystem& sys, int s,
                                    const Budget& budget = {}, int workers = 1) {
  FormSystem ext = (s == 1) ? sys : base_change(sys, s);
  const Field& Fs = ext.F;
  std::uint64_t Q = static_cast<std::uint64_t>(Fs.q);
  std::uint64_t total = 1;
  for (int i = 0; i < sys.n; ++i) total *= Q;
  budget.charge(total, "birch_locus_census");
  auto body = [&](std::uint64_t beginI, std::uint64_t endI) -> std::uint64_t {
    std::uint64_t cnt = 0;
    std::vector<felem> x(sys.n);
    for (std::uint64_t idx = beginI; idx < endI; ++idx) {
      std::uint64_t v = idx;
      for (int i = 0; i < sys.n; ++i) {
        x[i] = static_cast<felem>(v % Q);
        v /= Q;
      }
      std::vector<std::vector<felem>> jac(sys.R);
      for (int k = 0; k < sys.R; ++k) jac[k] = ext.gradient_at(k, x);
      if (matrix_rank(Fs, jac) < sys.R) ++cnt;
    }
    return cnt;
  };
  std::uint64_t count = parallel_sum<std::uint64_t>(total, workers, body);
  double dim = count ? std::log(static_cast<double>(count)) / std::log(static_cast<double>(Q))
                     : -1.0;
  return CensusRow{s, count, dim};
}

// max over nonzero h (up to scalar) of #{x : h.grad f(x) = 0}; for
// R = 1 this coincides with the Birch census.
inline CensusRow sigma_f_census(const FormSystem& sys, int s,
                                const Budget& budget = {}, int workers = 1) {
  FormSystem ext = (s == 1) ? sys : base_change(sys, s);
  const Field& Fs = ext.F;
  std::uint64_t Q = static_cast<std::uint64_t>(Fs.q);
  std::uint64_t points = 1;
  for (int i = 0; i < sys.n; ++i) points *= Q;
  // h over P^{R-1}(F_{q^s})
  std::uint64_t hcount = 0, pw = 1;
  for (int i = 0; i < sys.R; ++i) {
    hcount += pw;
    pw *= Q;
  }
  budget.charge(points * hcount, "sigma_f_census");
  std::uint64_t best = 0;
  std::vector<felem> h(sys.R, 0);
  for (int lead = sys.R - 1; lead >= 0; --lead) {
    std::uint64_t free_count = 1;
    for (int i = lead + 1; i < sys.R; ++i) free_count *= Q;
    for (std::uint64_t hidx = 0; hidx < free_count; ++hidx) {
      std::fill(h.begin(), h.end(), 0);
      h[lead] = 1;
      std::uint64_t v = hidx;
      for (int i = lead + 1; i < sys.R; ++i) {
        h[i] = static_cast<felem>(v % Q);
        v /= Q;
      }
      auto body = [&](std::uint64_t beginI, std::uint64_t endI) -> std::uint64_t {
        std::uint64_t cnt = 0;
        std::vector<felem> x(sys.n);
        for (std::uint64_t idx = beginI; idx < endI; ++idx) {
          std::uint64_t vv = idx;
          for (int i = 0; i < sys.n; ++i) {
            x[i] = static_cast<felem>(vv % Q);
            vv /= Q;
          }
          bool zero = true;
          for (int i = 0; i < sys.n && zero; ++i) {
            felem acc = 0;
            for (int k = 0; k < sys.R; ++k) {
              felem gk = 0;
              for (const auto& mono : ext.gradient(k, i)) {
                felem term = mono.coeff;
                for (int j = 0; j < sys.n && term != 0; ++j)
                  for (int e = 0; e < mono.exps[j]; ++e) term = Fs.mul(term, x[j]);
                gk = Fs.add(gk, term);
              }
              acc = Fs.add(acc, Fs.mul(h[k], gk));
            }
            zero = (acc == 0);
          }
          if (zero) ++cnt;
        }
        return cnt;
      };
      best = std::max(best, parallel_sum<std::uint64_t>(points, workers, body));
    }
  }
  double dim = best ? std::log(static_cast<double>(best)) / std::log(static_cast<double>(Q))
                    : -1.0;
  return CensusRow{s, best, dim};
}

// Point-count inequality #X(F_Q) <= delta * Q^r for a variety of known
// dimension r and degree delta.
inline bool dimension_degree_bound_holds(std::uint64_t count, std::uint64_t delta, int r,
                                         std::uint64_t Q) {
  std::uint64_t bound = delta;
  for (int i = 0; i < r; ++i) bound *= Q;
  return count <= bound;
}

}  // namespace ffcm
