#pragma once

#include "ffcm/cyclotomic.hpp"
#include "ffcm/laurent.hpp"

namespace ffcm {

// e_q(a) = zeta_p^{tr(a)} for a in F_q.
inline Cyclotomic e_q(const Field& F, felem a) {
  return Cyclotomic::zeta_pow(F.p, F.trace(a));
}

// psi(alpha) = e_q(a_{-1}); needs the t^{-1} digit above the floor.
inline Cyclotomic psi(const Field& F, const Laurent& alpha) {
  if (alpha.floor_ >= -1)
    throw precision_error("psi: t^{-1} digit below precision floor");
  return e_q(F, alpha.digit(-1));
}

// tr(digit_{-1}(alpha)) as a bare zeta exponent; hot-path variant.
inline int psi_exponent(const Field& F, const Laurent& alpha) {
  if (alpha.floor_ >= -1)
    throw precision_error("psi: t^{-1} digit below precision floor");
  return F.trace(alpha.digit(-1));
}

// sum_{|b| < q^N} psi(gamma * b) over polynomials b, exact.
inline Cyclotomic orth_sum(const Field& F, const Laurent& gamma, int N) {
  require(N >= 0, "orth_sum: N >= 0");
  if (gamma.floor_ > -(N + 1))
    throw precision_error("orth_sum: gamma digits needed to depth -(N+1)");
  std::vector<BigInt> bucket(F.p, 0);
  std::uint64_t count = poly_count(F, N);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    Poly b = poly_from_index(F, idx, N);
    // digit_{-1}(gamma*b) = sum_j b_j * gamma_{-1-j}
    felem dig = 0;
    for (int j = 0; j < N; ++j)
      dig = F.add(dig, F.mul(b.coeff(j), gamma.digit(-1 - j)));
    bucket[F.trace(dig)] += 1;
  }
  Cyclotomic z(F.p);
  for (int j = 0; j < F.p; ++j) z.c[j] = bucket[j];
  return z;
}

// Exact proportion of digit vectors (beta_{-1},...,beta_{-depth}) with
// ||h beta|| < q^{-N}.  The Lemma in play says this equals q^{-N}.
inline Rat measure_dist(const Field& F, const Poly& h, int N, int depth,
                        const Budget& budget = {}) {
  require(!h.is_zero(), "measure_dist: h must be nonzero");
  require(N >= 0, "measure_dist: N >= 0");
  require(depth >= h.deg() + N, "measure_dist: depth must be >= deg h + N");
  std::uint64_t total = poly_count(F, depth);
  budget.charge(total, "measure_dist");
  int s = h.deg();
  std::uint64_t hits = 0;
  std::vector<felem> beta(depth);  // beta[i] is the digit of t^{-1-i}
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t v = idx;
    for (int i = 0; i < depth; ++i) {
      beta[i] = static_cast<felem>(v % F.q);
      v /= F.q;
    }
    // digit of t^{-j} in h*beta is sum_i h_i beta_{-j-i}... requires
    // j + i <= depth, guaranteed by depth >= s + N for j <= N.
    bool ok = true;
    for (int j = 1; j <= N && ok; ++j) {
      felem dig = 0;
      for (int i = 0; i <= s; ++i) dig = F.add(dig, F.mul(h.coeff(i), beta[j + i - 1]));
      ok = (dig == 0);
    }
    if (ok) ++hits;
  }
  Rat r(BigInt(static_cast<unsigned long>(hits)), bigpow(F.q, depth));
  r.canonicalize();
  return r;
}

}  // namespace ffcm
