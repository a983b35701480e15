#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace ffcm {

// Exact arithmetic backends.  All "observable" numbers in this library
// are either integers (counts), rationals (densities, local factors)
// or cyclotomic integers (character sums); floating point appears only
// in display code.
using BigInt = mpz_class;
using Rat = mpq_class;

inline BigInt bigpow(long base, long exp) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base),
                static_cast<unsigned long>(exp));
  return r;
}

// q^e as an exact rational, e may be negative.
inline Rat qpow(long q, long e) {
  if (e >= 0) return Rat(bigpow(q, e));
  Rat r(1, bigpow(q, -e));
  r.canonicalize();
  return r;
}

inline std::string rat_str(const Rat& r) {
  Rat c = r;
  c.canonicalize();
  return c.get_str();  // "num/den", or "num" when den == 1
}

inline double rat_double(const Rat& r) { return r.get_d(); }

}  // namespace ffcm
